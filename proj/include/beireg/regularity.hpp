#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beireg/canonical.hpp"
#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/groebner.hpp"
#include "beireg/monomial_ideal.hpp"

namespace beireg {

// ---------------------------------------------------------------------------
// Combinatorial bounds
// ---------------------------------------------------------------------------

struct Bounds {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// lo = ell(G); hi sums min(c, n_i - 1, n_i - omega_i + 1) over components,
/// with single-vertex components contributing 0.
inline Bounds bounds(const Graph& g) {
  Bounds b;
  for (VertexMask comp : component_masks(g)) {
    const int n = detail::popcount(comp);
    b.lo += longest_induced_path(g, comp).length;
    if (n == 1) continue;
    b.hi += std::min({clique_count(g, comp), n - 1, n - clique_number(g, comp) + 1});
  }
  return b;
}

// ---------------------------------------------------------------------------
// Gröbner / Hochster oracle
// ---------------------------------------------------------------------------

inline constexpr const char* kOracleGateVariable = "BEIREG_ORACLE_MAX_N";

struct OracleOptions {
  /// Largest component order the oracle accepts.
  int max_vertices = 8;

  /// Defaults, with max_vertices overridden by BEIREG_ORACLE_MAX_N when set.
  static OracleOptions from_environment() {
    OracleOptions o;
    if (const char* env = std::getenv(kOracleGateVariable)) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1 || 2 * v > kMaxVariables)
        throw std::invalid_argument(std::string(kOracleGateVariable) + " must be an integer in [1, 10]");
      o.max_vertices = static_cast<int>(v);
    }
    return o;
  }
};

/// Initial ideal of J_G under the fixed lex order. If the leading terms are
/// not squarefree, the vertex order is reversed and the computation retried;
/// a second failure throws NonSquarefreeError.
inline MonomialIdeal binomial_edge_initial_ideal(const Graph& g) {
  const PolynomialContext ctx(g.order());
  try {
    return initial_ideal(lex_groebner(binomial_edge_ideal(g), ctx), ctx.variable_count());
  } catch (const NonSquarefreeError&) {
    VertexList reversed(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) reversed[v] = g.order() - 1 - v;
    return initial_ideal(lex_groebner(binomial_edge_ideal(permute(g, reversed)), ctx), ctx.variable_count());
  }
}

/// reg(S/J_G) as reg(S/in(J_G)) of the squarefree initial ideal, computed
/// with Hochster's formula over Q. Components are computed separately and
/// summed; results are cached by canonical form.
class RegularityOracle {
 public:
  explicit RegularityOracle(OracleOptions opts = {}) : opts_(opts) {}

  const OracleOptions& options() const { return opts_; }

  bool accepts(const Graph& g) const {
    for (VertexMask comp : component_masks(g))
      if (detail::popcount(comp) > opts_.max_vertices) return false;
    return true;
  }

  int operator()(const Graph& g) {
    int total = 0;
    for (VertexMask comp : component_masks(g)) total += connected(induced_subgraph(g, comp).graph);
    return total;
  }

  /// No component split and no cache.
  int direct(const Graph& g) const {
    check_gate(g.order());
    return hochster_regularity(binomial_edge_initial_ideal(g), hochster_options()).regularity;
  }

 private:
  int connected(const Graph& g) {
    if (g.order() <= 1) return 0;
    check_gate(g.order());
    if (g.order() > kCanonicalMaxOrder) return direct(g);
    const CanonicalLabeling canon = canonical_labeling(g);
    if (auto it = cache_.find(canon.form); it != cache_.end()) return it->second;
    const int value = hochster_regularity(binomial_edge_initial_ideal(canon.graph), hochster_options()).regularity;
    cache_.emplace(canon.form, value);
    return value;
  }

  HochsterOptions hochster_options() const { return {std::max(16, 2 * opts_.max_vertices)}; }

  void check_gate(int n) const {
    if (n > opts_.max_vertices)
      throw std::invalid_argument("oracle: component with " + std::to_string(n) + " vertices exceeds the limit of " +
                                  std::to_string(opts_.max_vertices));
  }

  OracleOptions opts_;
  std::map<std::string, int> cache_;
};

inline int oracle_reg(const Graph& g, const OracleOptions& opts = {}) {
  RegularityOracle oracle(opts);
  return oracle(g);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class Method { automatic, structural, oracle };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::structural: return "structural";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "auto") return Method::automatic;
  if (s == "structural") return Method::structural;
  if (s == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method '" + s + "'");
}

struct TraceStep {
  std::string rule;
  std::string detail;
};

struct RegularityReport {
  int lo = 0;
  int hi = 0;
  /// Interval result that no further method could settle.
  bool inexact = false;
  std::vector<TraceStep> trace;
  Method method = Method::automatic;

  bool exact() const { return lo == hi; }

  int value() const {
    if (!exact()) throw std::logic_error("regularity is only known to lie in an interval");
    return lo;
  }
};

// ---------------------------------------------------------------------------
// Structural solver
// ---------------------------------------------------------------------------

struct StructuralOptions {
  /// Recursion depth for the split inequality and deletion rules.
  int budget = 3;
  /// Harness self-test: the sandwich rule reports lo - 1.
  bool inject_sandwich_fault = false;
};

/// Deduces reg(S/J_G) from component additivity, the complete and path
/// base cases, the bound sandwich, gluing at a two-split cut vertex that is
/// simplicial in both splits, the split inequality
///   reg(G) <= max{reg(G - v), reg(G_v), reg(G_v - v) + 1}
/// at non-simplicial v, and monotonicity under vertex deletion.
class StructuralSolver {
 public:
  explicit StructuralSolver(StructuralOptions opts = {}) : opts_(opts) {}

  RegularityReport solve(const Graph& g) {
    RegularityReport report;
    report.method = Method::structural;
    const Bounds r = solve_range(g, opts_.budget, &report.trace);
    report.lo = r.lo;
    report.hi = r.hi;
    return report;
  }

 private:
  using Trace = std::vector<TraceStep>;

  static std::string range(const Bounds& b) {
    return b.lo == b.hi ? std::to_string(b.lo) : "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
  }

  static void note(Trace* trace, std::string rule, std::string detail) {
    if (trace) trace->push_back({std::move(rule), std::move(detail)});
  }

  std::string memo_key(const Graph& g, int budget) const {
    std::string key = std::to_string(budget) + ':';
    if (g.order() <= kCanonicalMaxOrder) return key + canonical_form(g);
    key += std::to_string(g.order()) + ':';
    for (VertexMask m : g.adjacency()) key += std::to_string(m) + ',';
    return key;
  }

  Bounds solve_range(const Graph& g, int budget, Trace* trace) {
    const int n = g.order();
    if (n == 0) return {0, 0};

    const auto comps = component_masks(g);
    if (comps.size() > 1) {
      Bounds sum;
      std::string parts;
      for (VertexMask comp : comps) {
        const Bounds b = solve_range(induced_subgraph(g, comp).graph, budget, nullptr);
        sum.lo += b.lo;
        sum.hi += b.hi;
        parts += (parts.empty() ? "" : " + ") + range(b);
      }
      note(trace, "component-additivity", std::to_string(comps.size()) + " components: " + parts + " = " + range(sum));
      return sum;
    }
    if (n == 1) {
      note(trace, "path-base", "single vertex: 0");
      return {0, 0};
    }
    if (is_complete(g)) {
      note(trace, "complete-base", "K_" + std::to_string(n) + ": 1");
      return {1, 1};
    }
    if (is_path(g)) {
      note(trace, "path-base", "path of length " + std::to_string(n - 1));
      return {n - 1, n - 1};
    }

    const std::string key = memo_key(g, budget);
    if (!trace)
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Bounds b = bounds(g);
    if (b.lo == b.hi) {
      const int v = opts_.inject_sandwich_fault ? b.lo - 1 : b.lo;
      note(trace, "sandwich", "ell = upper bound = " + std::to_string(b.lo));
      return memo_.insert_or_assign(key, Bounds{v, v}).first->second;
    }
    note(trace, "bounds", "ell = " + std::to_string(b.lo) + ", min(c, n-1, n-omega+1) = " + std::to_string(b.hi));

    if (apply_gluing(g, budget, b, trace) && b.lo == b.hi) return finish(key, b);

    if (budget > 0) {
      int best_v = -1;
      for (Vertex v = 0; v < n && b.lo < b.hi; ++v) {
        if (is_simplicial(g, v)) continue;
        const Graph closed = clique_closure(g, v);
        const int bound = std::max({solve_range(delete_vertex(g, v), budget - 1, nullptr).hi,
                                    solve_range(closed, budget - 1, nullptr).hi,
                                    solve_range(delete_vertex(closed, v), budget - 1, nullptr).hi + 1});
        if (bound < b.hi) {
          b.hi = bound;
          best_v = v;
        }
      }
      if (best_v >= 0)
        note(trace, "split-inequality", "at vertex " + std::to_string(best_v) + ": upper bound " + std::to_string(b.hi));

      int lo_v = -1;
      for (Vertex v = 0; v < n && b.lo < b.hi; ++v) {
        const int lo = solve_range(delete_vertex(g, v), budget - 1, nullptr).lo;
        if (lo > b.lo) {
          b.lo = lo;
          lo_v = v;
        }
      }
      if (lo_v >= 0)
        note(trace, "deletion-lower-bound", "G - " + std::to_string(lo_v) + ": lower bound " + std::to_string(b.lo));
    }
    return finish(key, b);
  }

  // Gluing at the first cut vertex with exactly two splits, simplicial in
  // both. Returns whether it applied.
  bool apply_gluing(const Graph& g, int budget, Bounds& b, Trace* trace) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!is_cut_vertex(g, v)) continue;
      const auto parts = splits_at(g, v);
      if (parts.size() != 2) continue;
      const InducedSubgraph s1 = induced_subgraph(g, parts[0]);
      const InducedSubgraph s2 = induced_subgraph(g, parts[1]);
      const auto local = [v](const InducedSubgraph& s) {
        return static_cast<Vertex>(std::find(s.origin.begin(), s.origin.end(), v) - s.origin.begin());
      };
      if (!is_simplicial(s1.graph, local(s1)) || !is_simplicial(s2.graph, local(s2))) continue;
      const Bounds r1 = solve_range(s1.graph, budget, nullptr);
      const Bounds r2 = solve_range(s2.graph, budget, nullptr);
      b.lo = std::max(b.lo, r1.lo + r2.lo);
      b.hi = std::min(b.hi, r1.hi + r2.hi);
      note(trace, "gluing", "at vertex " + std::to_string(v) + ": " + range(r1) + " + " + range(r2) + " = " + range(b));
      return true;
    }
    return false;
  }

  Bounds finish(const std::string& key, Bounds b) {
    if (b.lo > b.hi)
      throw std::logic_error("structural solver derived inconsistent bounds " + std::to_string(b.lo) + " > " +
                             std::to_string(b.hi));
    return memo_.insert_or_assign(key, b).first->second;
  }

  StructuralOptions opts_;
  std::map<std::string, Bounds> memo_;
};

inline RegularityReport structural_reg(const Graph& g, int budget = 3) {
  return StructuralSolver(StructuralOptions{budget, false}).solve(g);
}

// ---------------------------------------------------------------------------
// Facade
// ---------------------------------------------------------------------------

struct RegOptions {
  StructuralOptions structural;
  OracleOptions oracle;
};

/// auto: structural first, the oracle only when that leaves an interval and
/// every component is within the oracle gate.
inline RegularityReport reg(const Graph& g, Method method = Method::automatic, const RegOptions& opts = {}) {
  if (method == Method::structural) return StructuralSolver(opts.structural).solve(g);

  RegularityOracle oracle(opts.oracle);
  if (method == Method::oracle) {
    if (!oracle.accepts(g))
      throw std::invalid_argument("oracle: graph exceeds the component limit of " +
                                  std::to_string(opts.oracle.max_vertices) + " vertices");
    const int v = oracle(g);
    return {v, v, false, {{"oracle", "Hochster formula on the squarefree lex initial ideal over Q: " + std::to_string(v)}},
            Method::oracle};
  }

  RegularityReport report = StructuralSolver(opts.structural).solve(g);
  report.method = Method::automatic;
  if (report.exact()) return report;
  if (!oracle.accepts(g)) {
    report.inexact = true;
    return report;
  }
  const int v = oracle(g);
  if (v < report.lo || v > report.hi)
    throw std::logic_error("oracle value " + std::to_string(v) + " outside structural interval [" +
                           std::to_string(report.lo) + "," + std::to_string(report.hi) + "]");
  report.trace.push_back({"oracle", "Hochster formula on the squarefree lex initial ideal over Q: " + std::to_string(v)});
  report.lo = report.hi = v;
  return report;
}

}  // namespace beireg
