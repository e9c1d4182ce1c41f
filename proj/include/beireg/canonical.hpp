#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"

namespace beireg {

inline constexpr int kCanonicalMaxOrder = 8;
inline constexpr int kEnumerateMaxOrder = 7;

namespace detail {

// Branch and bound over vertex placements. Placing a vertex at position k
// fixes column k of the upper triangle, i.e. the bits (0,k), (1,k), ...,
// (k-1,k) with (0,k) most significant. The canonical matrix is the
// lexicographically least column sequence over all n! placements.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    placed_.reserve(static_cast<std::size_t>(n_));
    current_.resize(static_cast<std::size_t>(n_));
  }

  void run() {
    if (n_ == 0) return;
    place(0, 0);
  }

  const std::vector<std::uint32_t>& columns() const { return best_; }
  const VertexList& order() const { return best_order_; }

 private:
  // Sign of (current_[0..k] vs best_[0..k]) in lexicographic order.
  int compare_prefix(int k) const {
    for (int i = 0; i <= k; ++i)
      if (current_[i] != best_[i]) return current_[i] < best_[i] ? -1 : 1;
    return 0;
  }

  void place(int k, VertexMask used) {
    if (k == n_) {
      if (best_.empty() || compare_prefix(n_ - 1) < 0) {
        best_ = current_;
        best_order_ = placed_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used >> v & 1U) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < k; ++i) col = (col << 1) | (g_.adjacent(placed_[i], v) ? 1U : 0U);
      current_[k] = col;
      if (!best_.empty() && compare_prefix(k) > 0) continue;
      placed_.push_back(v);
      place(k + 1, used | bit(v));
      placed_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  VertexList placed_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  VertexList best_order_;
};

inline std::string encode_columns(int n, const std::vector<std::uint32_t>& cols) {
  std::string out;
  out.push_back(static_cast<char>(n));
  std::uint8_t byte = 0;
  int filled = 0;
  for (int k = 1; k < n; ++k) {
    for (int i = k - 1; i >= 0; --i) {
      byte = static_cast<std::uint8_t>((byte << 1) | ((cols[k] >> i) & 1U));
      if (++filled == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(byte << (8 - filled)));
  return out;
}

inline void check_canonical_order(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical_form: n = " + std::to_string(g.order()) +
                                " exceeds the brute-force limit of 8");
}

}  // namespace detail

/// Byte string that is equal for two graphs iff they are isomorphic: the
/// vertex count followed by the packed, lexicographically least upper-triangle
/// adjacency bit string over all vertex permutations.
inline std::string canonical_form(const Graph& g) {
  detail::check_canonical_order(g);
  detail::CanonicalSearch search(g);
  search.run();
  return detail::encode_columns(g.order(), search.columns());
}

struct CanonicalLabeling {
  std::string form;
  Graph graph;  ///< isomorphic copy of the input carrying the canonical matrix
};

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  detail::check_canonical_order(g);
  detail::CanonicalSearch search(g);
  search.run();
  VertexList perm(static_cast<std::size_t>(g.order()));
  const VertexList& order = search.order();
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = static_cast<Vertex>(pos);
  return {detail::encode_columns(g.order(), search.columns()), permute(g, perm)};
}

inline Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }

/// One representative per isomorphism class of graphs on n vertices, each in
/// canonical labelling, ordered by canonical form.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false) {
  if (n < 0 || n > kEnumerateMaxOrder)
    throw std::invalid_argument("enumerate_graphs: n = " + std::to_string(n) + " outside [0, 7]");
  // Every graph on k+1 vertices is some graph on k vertices plus one vertex,
  // so extending every class by every neighbourhood reaches every class.
  std::map<std::string, Graph> level;
  level.emplace(canonical_form(Graph(0)), Graph(0));
  for (int k = 0; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [key, base] : level) {
      for (VertexMask nbrs = 0; nbrs < (VertexMask{1} << k); ++nbrs) {
        Graph g(k + 1);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex v : detail::mask_to_list(nbrs)) g.add_edge(v, k);
        CanonicalLabeling canon = canonical_labeling(g);
        next.try_emplace(std::move(canon.form), std::move(canon.graph));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, g] : level)
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace beireg
