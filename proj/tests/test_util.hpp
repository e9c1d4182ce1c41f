#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/graph_io.hpp"

namespace testutil {

inline beireg::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  beireg::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline beireg::VertexList random_permutation(std::mt19937& rng, int n) {
  beireg::VertexList p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Induced subgraph on `mask` is a path (a single vertex counts, length 0).
inline bool induces_path(const beireg::Graph& g, beireg::VertexMask mask) {
  const auto sub = beireg::induced_subgraph(g, mask).graph;
  return beireg::is_connected(sub) && static_cast<int>(sub.size()) == sub.order() - 1 &&
         std::all_of(sub.adjacency().begin(), sub.adjacency().end(),
                     [](beireg::VertexMask m) { return std::popcount(m) <= 2; });
}

// Longest induced path length by trying every vertex subset.
inline int brute_force_lip(const beireg::Graph& g) {
  int best = 0;
  const beireg::VertexMask limit = beireg::VertexMask{1} << g.order();
  for (beireg::VertexMask s = 1; s < limit; ++s)
    if (std::popcount(s) - 1 > best && induces_path(g, s)) best = std::popcount(s) - 1;
  return best;
}

// Some vertex subset of size >= 4 induces a cycle (connected, 2-regular).
inline bool has_induced_long_cycle(const beireg::Graph& g) {
  const beireg::VertexMask limit = beireg::VertexMask{1} << g.order();
  for (beireg::VertexMask s = 1; s < limit; ++s) {
    if (std::popcount(s) < 4) continue;
    const auto sub = beireg::induced_subgraph(g, s).graph;
    if (beireg::is_connected(sub) &&
        std::all_of(sub.adjacency().begin(), sub.adjacency().end(),
                    [](beireg::VertexMask m) { return std::popcount(m) == 2; }))
      return true;
  }
  return false;
}

// Maximal cliques by checking every vertex subset.
inline std::vector<beireg::VertexMask> brute_force_maximal_cliques(const beireg::Graph& g) {
  std::vector<beireg::VertexMask> cliques;
  const beireg::VertexMask full = g.vertex_mask();
  for (beireg::VertexMask s = 1; s <= full; ++s) {
    if (!beireg::is_clique(g, s)) continue;
    bool maximal = true;
    for (beireg::Vertex v = 0; v < g.order() && maximal; ++v)
      if (!(s >> v & 1U) && beireg::is_clique(g, s | beireg::detail::bit(v))) maximal = false;
    if (maximal) cliques.push_back(s);
  }
  return cliques;
}

inline beireg::Graph fixture(const std::string& name) {
  return beireg::read_graph_file(std::string(BEIREG_FIXTURES) + "/" + name);
}

}  // namespace testutil
