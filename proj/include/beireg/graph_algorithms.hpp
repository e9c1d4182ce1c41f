#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "beireg/graph.hpp"

namespace beireg {

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Vertices reachable from `start` inside `within`.
inline VertexMask reach(const Graph& g, Vertex start, VertexMask within) {
  VertexMask seen = detail::bit(start) & within;
  VertexMask frontier = seen;
  while (frontier) {
    Vertex v = detail::lowest(frontier);
    frontier &= frontier - 1;
    VertexMask fresh = g.neighbors(v) & within & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

/// Connected components of g[within], ordered by their least vertex.
inline std::vector<VertexMask> component_masks(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left) {
    VertexMask comp = reach(g, detail::lowest(left), within);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

inline std::vector<VertexMask> component_masks(const Graph& g) {
  return component_masks(g, g.vertex_mask());
}

inline std::vector<VertexList> components(const Graph& g) {
  std::vector<VertexList> out;
  for (VertexMask m : component_masks(g)) out.push_back(detail::mask_to_list(m));
  return out;
}

inline bool is_connected(const Graph& g) { return component_masks(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Subgraphs
// ---------------------------------------------------------------------------

struct InducedSubgraph {
  Graph graph;
  VertexList origin;  ///< origin[i] = vertex of the parent graph that became i
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexMask within) {
  if (within & ~g.vertex_mask()) throw std::out_of_range("induced_subgraph: vertex id out of range");
  InducedSubgraph out{Graph(detail::popcount(within)), detail::mask_to_list(within)};
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.origin.size(); ++i) index[out.origin[i]] = static_cast<int>(i);
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) out.graph.add_edge(index[e.u], index[e.v]);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v : out.origin) labels.push_back(g.label(v));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexList& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    g.check_vertex(v);
    m |= detail::bit(v);
  }
  return induced_subgraph(g, m);
}

/// G - v, with vertices above v shifted down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return induced_subgraph(g, g.vertex_mask() & ~detail::bit(v)).graph;
}

inline bool is_clique(const Graph& g, VertexMask set) {
  for (VertexMask rest = set; rest; rest &= rest - 1) {
    Vertex v = detail::lowest(rest);
    if (set & ~(g.neighbors(v) | detail::bit(v))) return false;
  }
  return true;
}

inline bool is_complete(const Graph& g) { return is_clique(g, g.vertex_mask()); }

/// True iff g is a path graph P_n with n >= 1.
inline bool is_path(const Graph& g) {
  const int n = g.order();
  if (n == 0 || g.size() != static_cast<std::size_t>(n - 1) || !is_connected(g)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Longest induced paths
// ---------------------------------------------------------------------------

struct InducedPath {
  int length = 0;     ///< number of edges
  VertexList path;    ///< v_0, ..., v_length
};

namespace detail {

// Exhaustive extension search. `blocked` is the union of the closed
// neighbourhoods of every path vertex except the last one; a vertex may extend
// the path iff it is adjacent to the last vertex and not blocked.
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, VertexMask within) : g_(g), within_(within) {}

  InducedPath run() {
    const int target = popcount(within_) - 1;
    for (VertexMask starts = within_; starts; starts &= starts - 1) {
      path_.assign(1, lowest(starts));
      extend(0);
      if (best_.length == target) break;
    }
    return best_;
  }

 private:
  void extend(VertexMask blocked) {
    const Vertex last = path_.back();
    const int length = static_cast<int>(path_.size()) - 1;
    if (best_.path.empty() || length > best_.length) best_ = {length, path_};
    VertexMask on_path = 0;
    for (Vertex v : path_) on_path |= bit(v);
    if (length + popcount(within_ & ~blocked & ~on_path) <= best_.length) return;
    const VertexMask next_blocked = blocked | g_.neighbors(last) | bit(last);
    for (VertexMask cand = g_.neighbors(last) & within_ & ~blocked; cand; cand &= cand - 1) {
      path_.push_back(lowest(cand));
      extend(next_blocked);
      path_.pop_back();
    }
  }

  const Graph& g_;
  VertexMask within_;
  VertexList path_;
  InducedPath best_;
};

}  // namespace detail

/// Longest induced path of the connected graph g[within]; ties are broken by
/// the lexicographically least vertex sequence.
inline InducedPath longest_induced_path(const Graph& g, VertexMask within) {
  if (within == 0) throw std::invalid_argument("longest_induced_path: empty vertex set");
  if (reach(g, detail::lowest(within), within) != within)
    throw std::invalid_argument("longest_induced_path: graph is disconnected");
  return detail::InducedPathSearch(g, within).run();
}

inline InducedPath longest_induced_path(const Graph& g) {
  return longest_induced_path(g, g.vertex_mask());
}

/// Sum of longest induced path lengths over the connected components.
inline int ell(const Graph& g) {
  int total = 0;
  for (VertexMask comp : component_masks(g)) total += longest_induced_path(g, comp).length;
  return total;
}

// ---------------------------------------------------------------------------
// Cliques
// ---------------------------------------------------------------------------

namespace detail {

template <class Visit>
void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x, Visit& visit) {
  if (p == 0 && x == 0) {
    visit(r);
    return;
  }
  // Pivot maximising |P ∩ N(u)|.
  Vertex pivot = lowest(p | x);
  int best = -1;
  for (VertexMask ux = p | x; ux; ux &= ux - 1) {
    Vertex u = lowest(ux);
    int k = popcount(p & g.neighbors(u));
    if (k > best) best = k, pivot = u;
  }
  for (VertexMask cand = p & ~g.neighbors(pivot); cand; cand &= cand - 1) {
    Vertex v = lowest(cand);
    VertexMask nv = g.neighbors(v);
    bron_kerbosch(g, r | bit(v), p & nv, x & nv, visit);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace detail

/// Inclusion-maximal cliques of g[within] as masks, in no particular order.
inline std::vector<VertexMask> maximal_clique_masks(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  auto visit = [&](VertexMask c) { out.push_back(c); };
  detail::bron_kerbosch(g, 0, within, 0, visit);
  return out;
}

/// Each clique sorted; the list sorted lexicographically.
inline std::vector<VertexList> maximal_cliques(const Graph& g) {
  std::vector<VertexList> out;
  if (g.order() == 0) return out;
  for (VertexMask c : maximal_clique_masks(g, g.vertex_mask())) out.push_back(detail::mask_to_list(c));
  std::sort(out.begin(), out.end());
  return out;
}

inline int clique_count(const Graph& g, VertexMask within) {
  if (within == 0) return 0;
  return static_cast<int>(maximal_clique_masks(g, within).size());
}

inline int clique_count(const Graph& g) { return clique_count(g, g.vertex_mask()); }

inline int clique_number(const Graph& g, VertexMask within) {
  if (within == 0) throw std::invalid_argument("clique_number: empty graph");
  int best = 0;
  for (VertexMask c : maximal_clique_masks(g, within)) best = std::max(best, detail::popcount(c));
  return best;
}

inline int clique_number(const Graph& g) { return clique_number(g, g.vertex_mask()); }

/// Lexicographically least clique of maximum size.
inline VertexList maximum_clique(const Graph& g) {
  const int omega = clique_number(g);
  for (const VertexList& c : maximal_cliques(g))
    if (static_cast<int>(c.size()) == omega) return c;
  throw std::logic_error("maximum_clique: no clique of maximum size");
}

// ---------------------------------------------------------------------------
// Chordality and local structure
// ---------------------------------------------------------------------------

/// Maximum cardinality search, then a perfect elimination ordering check of
/// the reversed visit order.
inline bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit_index(static_cast<std::size_t>(n), -1);
  VertexList order;
  VertexMask visited = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!(visited >> v & 1U) && (pick < 0 || weight[v] > weight[pick])) pick = v;
    visited |= detail::bit(pick);
    visit_index[pick] = step;
    order.push_back(pick);
    for (Vertex w : g.neighbor_list(pick))
      if (!(visited >> w & 1U)) ++weight[w];
  }
  // Earlier-visited neighbours of v, minus the latest of them, must all be
  // adjacent to that latest one.
  for (Vertex v : order) {
    VertexMask earlier = 0;
    Vertex parent = -1;
    for (Vertex w : g.neighbor_list(v)) {
      if (visit_index[w] < visit_index[v]) {
        earlier |= detail::bit(w);
        if (parent < 0 || visit_index[w] > visit_index[parent]) parent = w;
      }
    }
    if (parent < 0) continue;
    VertexMask rest = earlier & ~detail::bit(parent);
    if (rest & ~g.neighbors(parent)) return false;
  }
  return true;
}

/// N[v] is a clique, equivalently v lies in exactly one maximal clique.
inline bool is_simplicial(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return is_clique(g, g.neighbors(v));
}

inline bool is_cut_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return component_masks(g, g.vertex_mask() & ~detail::bit(v)).size() > component_masks(g).size();
}

/// Splits of g at the cut vertex v: each component H of (component of v) - v
/// together with v. Parts are ordered by their least vertex other than v.
inline std::vector<VertexList> splits_at(const Graph& g, Vertex v) {
  if (!is_cut_vertex(g, v))
    throw std::invalid_argument("splits_at: vertex " + std::to_string(v) + " is not a cut vertex");
  const VertexMask own = reach(g, v, g.vertex_mask()) & ~detail::bit(v);
  std::vector<VertexList> parts;
  for (VertexMask h : component_masks(g, own)) parts.push_back(detail::mask_to_list(h | detail::bit(v)));
  return parts;
}

/// G_v: g with every pair of neighbours of v joined.
inline Graph clique_closure(const Graph& g, Vertex v) {
  g.check_vertex(v);
  Graph out = g;
  const VertexList nbrs = g.neighbor_list(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) out.add_edge(nbrs[i], nbrs[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Summary
// ---------------------------------------------------------------------------

struct GraphInvariants {
  int ell = 0;
  int clique_count = 0;
  int omega = 0;
  int component_count = 0;
  bool is_chordal = false;
  bool is_connected = false;
};

inline GraphInvariants invariants(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("invariants: empty graph");
  GraphInvariants inv;
  inv.ell = ell(g);
  inv.clique_count = clique_count(g);
  inv.omega = clique_number(g);
  inv.component_count = static_cast<int>(component_masks(g).size());
  inv.is_chordal = is_chordal(g);
  inv.is_connected = inv.component_count == 1;
  return inv;
}

}  // namespace beireg
