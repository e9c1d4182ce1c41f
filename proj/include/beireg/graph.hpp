#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace beireg {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using VertexMask = std::uint64_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }
inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline VertexList mask_to_list(VertexMask m) {
  VertexList out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

inline VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

}  // namespace detail

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Neighbourhoods are stored as 64-bit masks, so graphs are limited to 64
/// vertices. Every routine in this library targets small graphs (exhaustive
/// searches are exponential), so the cap is never the binding constraint.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : adj_(check_order(n), 0) {}

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int order() const { return static_cast<int>(adj_.size()); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (VertexMask m : adj_) twice += static_cast<std::size_t>(detail::popcount(m));
    return twice / 2;
  }

  bool empty() const { return adj_.empty(); }

  /// Adds {u, v}. Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return false;
    adj_[u] |= detail::bit(v);
    adj_[v] |= detail::bit(u);
    return true;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~detail::bit(v);
    adj_[v] &= ~detail::bit(u);
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1U;
  }

  VertexMask neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  VertexList neighbor_list(Vertex v) const { return detail::mask_to_list(neighbors(v)); }

  int degree(Vertex v) const { return detail::popcount(neighbors(v)); }

  VertexMask vertex_mask() const { return detail::full_mask(order()); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
      VertexMask higher = adj_[u] & ~detail::full_mask(u + 1);
      for (Vertex v : detail::mask_to_list(higher)) out.push_back({u, v});
    }
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }

  bool has_labels() const { return !labels_.empty(); }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != order())
      throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
  }

  std::string label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
  }

  std::optional<Vertex> find_label(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                              std::to_string(order()) + ")");
  }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  /// Compact key for hashing labelled graphs: one mask per vertex.
  const std::vector<VertexMask>& adjacency() const { return adj_; }

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 64]");
    return static_cast<std::size_t>(n);
  }

  std::vector<VertexMask> adj_;
  std::vector<std::string> labels_;
};

// Small named families used throughout tests, generators and the CLI.

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Path on n vertices 0-1-...-(n-1), i.e. of length n-1.
inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

/// K_{1,k} with centre 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + shift, e.v + shift);
  if (a.has_labels() || b.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v = 0; v < a.order(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.order(); ++v) labels.push_back(b.label(v));
    g.set_labels(std::move(labels));
  }
  return g;
}

/// Image of g under the relabelling v -> perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size does not match vertex count");
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace beireg
