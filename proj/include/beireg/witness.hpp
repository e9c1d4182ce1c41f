#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "beireg/canonical.hpp"
#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/regularity.hpp"

namespace beireg {

/// The requested triple is excluded by a known obstruction rather than by
/// malformed parameters.
class ImpossibleRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class LabeledBuilder {
 public:
  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }
  void edge(Vertex u, Vertex v) { edges_.push_back({u, v}); }
  void clique(const VertexList& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
  }

  Graph build() const {
    Graph g(static_cast<int>(labels_.size()));
    for (const Edge& e : edges_) g.add_edge(e.u, e.v);
    g.set_labels(labels_);
    return g;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

inline std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

inline void require_exact(const Graph& g, int r, const char* who) {
  const RegularityReport rep = structural_reg(g);
  if (!rep.exact() || rep.value() != r)
    throw std::logic_error(std::string(who) + ": structural solver did not return reg = " + std::to_string(r));
}

}  // namespace detail

/// Graph with ell(G) = ell, reg(S/J_G) = r and c(G) = c.
///
/// ell = 1: K_2 plus c - 1 isolated vertices. ell = 2: apex v with r
/// triangles {v, v_i, v_i'} and c - r pendant edges {v, w_j}. ell >= 3: the
/// ell = 2 graph with r - ell + 2 triangles and a path v_1, u_1, ..., u_{ell-2}.
/// Vertex ids follow apex, triangles, pendants, path.
inline Graph gen_lrc(int ell, int r, int c) {
  if (ell < 1 || ell > r || r > c)
    throw std::invalid_argument("gen_lrc: need 1 <= ell <= r <= c, got " + detail::triple(ell, r, c));
  if (ell == 1 && r != 1)
    throw ImpossibleRequest("gen_lrc: ell = 1 forces a single nontrivial component, which is complete, so reg = 1; "
                            "no graph realizes " + detail::triple(ell, r, c));

  detail::LabeledBuilder b;
  if (ell == 1) {
    const Vertex one = b.add("1");
    b.edge(one, b.add("2"));
    for (int j = 1; j < c; ++j) b.add("w" + std::to_string(j));
  } else {
    const int triangles = ell == 2 ? r : r - ell + 2;
    const Vertex v = b.add("v");
    VertexList tips;
    for (int i = 1; i <= triangles; ++i) {
      const Vertex a = b.add("v" + std::to_string(i));
      const Vertex a2 = b.add("v" + std::to_string(i) + "'");
      b.clique({v, a, a2});
      tips.push_back(a);
    }
    for (int j = 1; j <= c - r; ++j) b.edge(v, b.add("w" + std::to_string(j)));
    Vertex prev = tips.front();
    for (int k = 1; k <= ell - 2; ++k) {
      const Vertex u = b.add("u" + std::to_string(k));
      b.edge(prev, u);
      prev = u;
    }
  }
  Graph g = b.build();

  if (beireg::ell(g) != ell || clique_count(g) != c)
    throw std::logic_error("gen_lrc: invariants of the construction do not match " + detail::triple(ell, r, c));
  detail::require_exact(g, r, "gen_lrc");
  return g;
}

/// Connected graph with ell(G) = ell, reg(S/J_G) = r and n - omega + 1 = wbar:
/// the path 1..ell+1, K complete on {1, 2} and U, K' complete on {2, 3}, V
/// and Q, and the matching {q_k, q_k'}. |U| = |V| = wbar - r, |Q| = r - ell.
inline Graph gen_lrw(int ell, int r, int wbar) {
  if (ell < 2 || ell > r || r > wbar)
    throw std::invalid_argument("gen_lrw: need 3 <= ell <= r <= wbar, got " + detail::triple(ell, r, wbar));
  if (ell == 2)
    throw ImpossibleRequest("gen_lrw: ell = 2 is not covered by this construction; no connected graph realizes "
                            "(2, 3, 3), and which (r, wbar) occur with ell = 2 is an open question");

  detail::LabeledBuilder b;
  VertexList path;
  for (int i = 1; i <= ell + 1; ++i) path.push_back(b.add(std::to_string(i)));
  VertexList k1{path[0], path[1]};
  VertexList k2{path[1], path[2]};
  for (int i = 1; i <= wbar - r; ++i) k1.push_back(b.add("u" + std::to_string(i)));
  for (int i = 1; i <= wbar - r; ++i) k2.push_back(b.add("v" + std::to_string(i)));
  VertexList q;
  for (int i = 1; i <= r - ell; ++i) q.push_back(b.add("q" + std::to_string(i)));
  for (Vertex x : q) k2.push_back(x);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) b.edge(path[i], path[i + 1]);
  b.clique(k1);
  b.clique(k2);
  for (int i = 1; i <= r - ell; ++i) b.edge(q[static_cast<std::size_t>(i - 1)], b.add("q" + std::to_string(i) + "'"));
  Graph g = b.build();

  if (!is_connected(g) || beireg::ell(g) != ell || g.order() - clique_number(g) + 1 != wbar)
    throw std::logic_error("gen_lrw: invariants of the construction do not match " + detail::triple(ell, r, wbar));
  detail::require_exact(g, r, "gen_lrw");
  return g;
}

inline constexpr int kSearchMaxOrder = 7;

/// Connected graphs with ell = 2, n - omega + 1 = wbar, 2 <= omega <= max_omega
/// and oracle regularity r, up to isomorphism, canonically labeled. Hosts
/// are K_omega plus wbar - 1 further vertices with every choice of edges
/// among them and to the clique. Results are ordered by omega, then by
/// canonical form. Only sizes n = omega + wbar - 1 <= 7 are searched.
inline std::vector<Graph> search_l2(int r, int wbar, int max_omega, RegularityOracle* oracle = nullptr) {
  if (r < 2 || r > wbar) throw std::invalid_argument("search_l2: need 2 <= r <= wbar");
  if (max_omega < 2) throw std::invalid_argument("search_l2: max_omega must be at least 2");
  if (max_omega + wbar - 1 > kSearchMaxOrder)
    throw std::invalid_argument("search_l2: n = max_omega + wbar - 1 = " + std::to_string(max_omega + wbar - 1) +
                                " exceeds the search limit of " + std::to_string(kSearchMaxOrder));
  RegularityOracle local;
  RegularityOracle& reg_of = oracle ? *oracle : local;

  std::vector<Graph> hits;
  const int extras = wbar - 1;
  for (int omega = 2; omega <= max_omega; ++omega) {
    const int n = omega + extras;
    std::vector<Edge> optional;
    for (Vertex e = omega; e < n; ++e)
      for (Vertex u = 0; u < e; ++u) optional.push_back({u, e});
    std::map<std::string, Graph> classes;
    const std::uint64_t total = std::uint64_t{1} << optional.size();
    for (std::uint64_t pick = 0; pick < total; ++pick) {
      Graph host(n);
      for (Vertex u = 0; u < omega; ++u)
        for (Vertex v = u + 1; v < omega; ++v) host.add_edge(u, v);
      for (std::size_t k = 0; k < optional.size(); ++k)
        if (pick >> k & 1) host.add_edge(optional[k].u, optional[k].v);
      if (!is_connected(host) || clique_number(host) != omega || ell(host) != 2) continue;
      CanonicalLabeling canon = canonical_labeling(host);
      classes.emplace(std::move(canon.form), std::move(canon.graph));
    }
    for (auto& [form, g] : classes)
      if (reg_of(g) == r) hits.push_back(std::move(g));
  }
  return hits;
}

}  // namespace beireg
