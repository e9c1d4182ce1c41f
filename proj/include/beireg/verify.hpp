#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "beireg/canonical.hpp"
#include "beireg/characterize.hpp"
#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/groebner.hpp"
#include "beireg/regularity.hpp"

namespace beireg {

/// Check names, in report order.
inline const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names{
      "graph-core",          // clique edge cover, induced path, closure, canonical invariance
      "bounds",              // ell <= reg <= min(c, n-1), per component <= n_i - omega_i + 1
      "cl-characterization", // recognize_cl <=> ell = c <=> reg = ell = c, certificate validates
      "wl-characterization", // connected: recognize_wl <=> ell = n-omega+1 <=> reg = ell = n-omega+1
      "sig-implies-cl",
      "structural-contains-oracle",
      "squarefree-initial-ideal",  // and zero reduction of all S-polynomials
      "gluing",
  };
  return names;
}

struct Counterexample {
  Graph graph;
  std::string message;
};

struct CheckTally {
  int passed = 0;
  int failed = 0;
  std::vector<Counterexample> counterexamples;
};

struct VerificationReport {
  std::vector<int> n_range;
  std::map<int, int> graph_counts;
  std::map<std::string, CheckTally> checks;

  int total_graphs() const {
    int t = 0;
    for (const auto& [n, c] : graph_counts) t += c;
    return t;
  }

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.failed == 0; });
  }
};

struct VerifyOptions {
  int max_n = 6;
  bool connected_only = false;
  int jobs = 1;
  bool inject_sandwich_fault = false;
  OracleOptions oracle;
  /// Counterexamples kept per check; the tallies always count all.
  std::size_t max_counterexamples = 25;
};

namespace detail {

using CheckOutcome = std::optional<std::string>;  // nullopt = pass

struct GraphChecks {
  RegularityOracle oracle;
  StructuralSolver solver;

  GraphChecks(const OracleOptions& o, bool fault) : oracle(o), solver(StructuralOptions{3, fault}) {}

  CheckOutcome graph_core(const Graph& g) {
    const auto cliques = maximal_clique_masks(g, g.vertex_mask());
    for (const Edge& e : g.edges()) {
      if (std::none_of(cliques.begin(), cliques.end(),
                       [&](VertexMask c) { return (c >> e.u & 1U) && (c >> e.v & 1U); }))
        return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} in no maximal clique";
    }
    for (VertexMask comp : component_masks(g)) {
      const InducedPath p = longest_induced_path(g, comp);
      for (std::size_t i = 0; i < p.path.size(); ++i)
        for (std::size_t k = i + 1; k < p.path.size(); ++k)
          if (g.adjacent(p.path[i], p.path[k]) != (k == i + 1)) return std::string("longest induced path has a chord");
    }
    for (Vertex v = 0; v < g.order(); ++v)
      if ((clique_closure(g, v) == g) != is_simplicial(g, v))
        return "clique closure at " + std::to_string(v) + " disagrees with simpliciality";
    VertexList reversed(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) reversed[v] = g.order() - 1 - v;
    if (canonical_form(permute(g, reversed)) != canonical_form(g))
      return std::string("canonical form changed under relabeling");
    return std::nullopt;
  }

  CheckOutcome bounds_check(const Graph& g, int reg) {
    const int n = g.order();
    const int l = ell(g);
    if (reg < l) return "reg " + std::to_string(reg) + " < ell " + std::to_string(l);
    const int hi = std::min(clique_count(g), n - 1);
    if (reg > hi) return "reg " + std::to_string(reg) + " > min(c, n-1) = " + std::to_string(hi);
    for (VertexMask comp : component_masks(g)) {
      const Graph h = induced_subgraph(g, comp).graph;
      const int ri = oracle(h);
      if (ri > h.order() - clique_number(h) + 1)
        return "component reg " + std::to_string(ri) + " > n_i - omega_i + 1";
    }
    const Bounds b = bounds(g);
    if (reg < b.lo || reg > b.hi) return std::string("reg outside the combined bounds");
    return std::nullopt;
  }

  static CheckOutcome cl_check(const Graph& g, int reg) {
    const int l = ell(g);
    const int c = clique_count(g);
    const CLRecognition rec = recognize_cl(g);
    const bool recognized = std::holds_alternative<CLCertificate>(rec);
    if (recognized != (l == c)) return std::string("recognize_cl disagrees with ell = c");
    if ((l == c) != (reg == l && reg == c)) return std::string("ell = c does not match reg = ell = c");
    if (recognized)
      if (auto fail = validate_cl_certificate(g, std::get<CLCertificate>(rec))) return "certificate: " + *fail;
    return std::nullopt;
  }

  static CheckOutcome wl_check(const Graph& g, int reg) {
    if (!is_connected(g)) return std::nullopt;
    const int l = ell(g);
    const int w = g.order() - clique_number(g) + 1;
    const WLRecognition rec = recognize_wl(g);
    const bool recognized = std::holds_alternative<WLDecomposition>(rec);
    if (recognized != (l == w)) return std::string("recognize_wl disagrees with ell = n - omega + 1");
    if ((l == w) != (reg == l && reg == w)) return std::string("ell = n - omega + 1 does not match reg");
    if (recognized)
      if (auto fail = validate_wl_decomposition(g, std::get<WLDecomposition>(rec))) return "decomposition: " + *fail;
    return std::nullopt;
  }

  static CheckOutcome sig_check(const Graph& g) {
    const SIGRecognition sig = recognize_sig(g);
    if (!sig.recognized) return std::nullopt;
    if (!std::holds_alternative<CLCertificate>(recognize_cl(g))) return std::string("SIG graph rejected by recognize_cl");
    if (sig.families)
      for (const SIGFamily& f : *sig.families)
        if (auto v = validate_sig_family(f)) return "SIG family invalid: " + v->message;
    return std::nullopt;
  }

  CheckOutcome structural_check(const Graph& g, int reg) {
    const RegularityReport rep = solver.solve(g);
    if (reg < rep.lo || reg > rep.hi)
      return "structural [" + std::to_string(rep.lo) + "," + std::to_string(rep.hi) + "] misses oracle " +
             std::to_string(reg);
    return std::nullopt;
  }

  static CheckOutcome squarefree_check(const Graph& g) {
    const PolynomialContext ctx(g.order());
    const auto gb = lex_groebner(binomial_edge_ideal(g), ctx);
    for (const Binomial& b : gb)
      if (!b.lead.is_squarefree()) return "non-squarefree leading term " + ctx.format(b.lead);
    if (!is_groebner_basis(gb)) return std::string("an S-polynomial does not reduce to zero");
    return std::nullopt;
  }

  CheckOutcome gluing_check(const Graph& g, int reg) {
    if (!is_connected(g)) return std::nullopt;
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
      const int sum = oracle(s1.graph) + oracle(s2.graph);
      if (sum != reg)
        return "gluing at " + std::to_string(v) + ": " + std::to_string(sum) + " != " + std::to_string(reg);
    }
    return std::nullopt;
  }

  // One outcome per entry of verification_checks().
  std::vector<CheckOutcome> run(const Graph& g) {
    std::vector<CheckOutcome> out(verification_checks().size());
    std::optional<int> reg;
    std::string reg_error;
    try {
      reg = oracle(g);
    } catch (const std::exception& e) {
      reg_error = std::string("oracle failed: ") + e.what();
    }
    const auto guarded = [&](std::size_t k, const std::function<CheckOutcome()>& f, bool needs_reg) {
      if (needs_reg && !reg) {
        out[k] = reg_error;
        return;
      }
      try {
        out[k] = f();
      } catch (const std::exception& e) {
        out[k] = std::string("exception: ") + e.what();
      }
    };
    guarded(0, [&] { return graph_core(g); }, false);
    guarded(1, [&] { return bounds_check(g, *reg); }, true);
    guarded(2, [&] { return cl_check(g, *reg); }, true);
    guarded(3, [&] { return wl_check(g, *reg); }, true);
    guarded(4, [&] { return sig_check(g); }, false);
    guarded(5, [&] { return structural_check(g, *reg); }, true);
    guarded(6, [&] { return squarefree_check(g); }, false);
    guarded(7, [&] { return gluing_check(g, *reg); }, true);
    return out;
  }
};

}  // namespace detail

/// Runs every check on every isomorphism class with 1 <= n <= max_n.
/// Workers own their oracle and solver caches; results are merged in
/// enumeration order, so the report does not depend on the job count.
inline VerificationReport run_verification(const VerifyOptions& opts = {}) {
  if (opts.max_n < 1 || opts.max_n > kEnumerateMaxOrder)
    throw std::invalid_argument("verify: max_n must be in [1, " + std::to_string(kEnumerateMaxOrder) + "]");
  if (opts.max_n > opts.oracle.max_vertices)
    throw std::invalid_argument("verify: max_n exceeds the oracle limit of " + std::to_string(opts.oracle.max_vertices));
  if (opts.jobs < 1) throw std::invalid_argument("verify: jobs must be positive");

  VerificationReport report;
  std::vector<Graph> graphs;
  for (int n = 1; n <= opts.max_n; ++n) {
    auto batch = enumerate_graphs(n, opts.connected_only);
    report.n_range.push_back(n);
    report.graph_counts[n] = static_cast<int>(batch.size());
    for (Graph& g : batch) graphs.push_back(std::move(g));
  }

  std::vector<std::vector<detail::CheckOutcome>> results(graphs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    detail::GraphChecks checks(opts.oracle, opts.inject_sandwich_fault);
    for (std::size_t i = next++; i < graphs.size(); i = next++) results[i] = checks.run(graphs[i]);
  };
  const int jobs = std::min<int>(opts.jobs, static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const auto& names = verification_checks();
  for (const auto& name : names) report.checks[name];
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t k = 0; k < names.size(); ++k) {
      CheckTally& tally = report.checks[names[k]];
      if (!results[i][k]) {
        ++tally.passed;
        continue;
      }
      ++tally.failed;
      if (tally.counterexamples.size() < opts.max_counterexamples)
        tally.counterexamples.push_back({graphs[i], *results[i][k]});
    }
  return report;
}

}  // namespace beireg
