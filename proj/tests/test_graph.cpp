#include <gtest/gtest.h>

#include <random>
#include <set>

#include "beireg/canonical.hpp"
#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/graph_io.hpp"
#include "test_util.hpp"

using namespace beireg;

TEST(Graph, EdgesAreSortedAndDeduplicated) {
  Graph g(4);
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_FALSE(g.add_edge(1, 2));
  EXPECT_TRUE(g.add_edge(0, 3));
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::out_of_range);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  g.remove_edge(3, 0);
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Graph, LabelsDefaultToIdsAndSurviveInducedSubgraph) {
  Graph g = path_graph(3);
  EXPECT_EQ(g.label(2), "2");
  g.set_labels({"a", "b", "c"});
  EXPECT_EQ(g.find_label("c"), 2);
  const auto sub = induced_subgraph(g, VertexList{2, 1});
  EXPECT_EQ(sub.graph.label(0), "b");
  EXPECT_EQ(sub.origin, (VertexList{1, 2}));
}

TEST(GraphAlgorithms, ComponentsAndSplits) {
  const Graph g = disjoint_union(path_graph(3), complete_graph(3));
  EXPECT_EQ(components(g), (std::vector<VertexList>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_cut_vertex(g, 1));
  EXPECT_FALSE(is_cut_vertex(g, 4));
  EXPECT_EQ(splits_at(star_graph(3), 0).size(), 3u);
  EXPECT_THROW(splits_at(complete_graph(3), 0), std::invalid_argument);
}

TEST(GraphAlgorithms, NamedFamilies) {
  EXPECT_EQ(ell(path_graph(6)), 5);
  EXPECT_EQ(ell(cycle_graph(7)), 5);
  EXPECT_EQ(ell(complete_graph(5)), 1);
  EXPECT_EQ(ell(Graph(3)), 0);
  EXPECT_EQ(clique_count(Graph(3)), 3);
  EXPECT_EQ(clique_count(cycle_graph(5)), 5);
  EXPECT_EQ(clique_number(complete_graph(4)), 4);
  EXPECT_TRUE(is_path(path_graph(4)));
  EXPECT_FALSE(is_path(star_graph(3)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_chordal(star_graph(4)));
}

TEST(GraphAlgorithms, LongestInducedPathMatchesBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 8;
    const Graph g = testutil::random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    int total = 0;
    for (VertexMask comp : component_masks(g)) {
      const auto sub = induced_subgraph(g, comp).graph;
      const InducedPath p = longest_induced_path(sub);
      EXPECT_EQ(p.length, testutil::brute_force_lip(sub));
      EXPECT_EQ(static_cast<int>(p.path.size()), p.length + 1);
      VertexMask m = 0;
      for (Vertex v : p.path) m |= detail::bit(v);
      EXPECT_TRUE(testutil::induces_path(sub, m));
      for (std::size_t i = 0; i + 1 < p.path.size(); ++i) EXPECT_TRUE(sub.adjacent(p.path[i], p.path[i + 1]));
      total += p.length;
    }
    EXPECT_EQ(ell(g), total);
  }
}

TEST(GraphAlgorithms, LongestInducedPathIsLexLeast) {
  // C_5: several paths of length 3; the least vertex sequence starts 0, 1.
  EXPECT_EQ(longest_induced_path(cycle_graph(5)).path, (VertexList{0, 1, 2, 3}));
  EXPECT_THROW(longest_induced_path(Graph(2)), std::invalid_argument);
}

TEST(GraphAlgorithms, MaximalCliquesMatchBruteForceAndCoverEdges) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testutil::random_graph(rng, 1 + trial % 9, 0.5);
    auto fast = maximal_clique_masks(g, g.vertex_mask());
    auto slow = testutil::brute_force_maximal_cliques(g);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    EXPECT_EQ(fast, slow);
    for (const Edge& e : g.edges())
      EXPECT_TRUE(std::any_of(fast.begin(), fast.end(),
                              [&](VertexMask c) { return (c >> e.u & 1U) && (c >> e.v & 1U); }));
    int omega = 0;
    for (VertexMask c : slow) omega = std::max(omega, std::popcount(c));
    EXPECT_EQ(clique_number(g), omega);
  }
}

TEST(GraphAlgorithms, AdditiveOverDisjointUnion) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = testutil::random_graph(rng, 1 + trial % 5, 0.5);
    const Graph b = testutil::random_graph(rng, 1 + (trial / 5) % 5, 0.6);
    const Graph u = disjoint_union(a, b);
    EXPECT_EQ(ell(u), ell(a) + ell(b));
    EXPECT_EQ(clique_count(u), clique_count(a) + clique_count(b));
    EXPECT_EQ(maximal_cliques(u).size(), maximal_cliques(a).size() + maximal_cliques(b).size());
  }
}

TEST(GraphAlgorithms, ClosureUnchangedIffSimplicial) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testutil::random_graph(rng, 2 + trial % 7, 0.45);
    for (Vertex v = 0; v < g.order(); ++v) {
      const Graph c = clique_closure(g, v);
      EXPECT_EQ(c == g, is_simplicial(g, v));
      EXPECT_TRUE(is_simplicial(c, v));
    }
  }
}

TEST(GraphAlgorithms, ChordalMatchesInducedCycleSearch) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) EXPECT_EQ(is_chordal(g), !testutil::has_induced_long_cycle(g));
}

TEST(GraphAlgorithms, InvariantsRejectEmptyGraph) {
  EXPECT_THROW(invariants(Graph(0)), std::invalid_argument);
  const auto inv = invariants(cycle_graph(4));
  EXPECT_EQ(inv.ell, 2);
  EXPECT_EQ(inv.clique_count, 4);
  EXPECT_EQ(inv.omega, 2);
  EXPECT_FALSE(inv.is_chordal);
}

TEST(Canonical, InvariantUnderRandomPermutation) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = testutil::random_graph(rng, n, 0.5);
    const auto perm = testutil::random_permutation(rng, n);
    const Graph h = permute(g, perm);
    EXPECT_EQ(canonical_form(h), canonical_form(g));
    const auto lab = canonical_labeling(g);
    EXPECT_EQ(canonical_form(lab.graph), lab.form);
    EXPECT_EQ(lab.graph.size(), g.size());
  }
}

TEST(Canonical, DistinguishesNonIsomorphicGraphs) {
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star_graph(3)));
  EXPECT_NE(canonical_form(cycle_graph(6)), canonical_form(disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_THROW(canonical_form(Graph(9)), std::invalid_argument);
}

TEST(Canonical, EnumerationCounts) {
  const int all[] = {1, 2, 4, 11, 34, 156};
  const int connected[] = {1, 1, 2, 6, 21, 112};
  int total = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    EXPECT_EQ(static_cast<int>(graphs.size()), all[n - 1]) << "n = " << n;
    EXPECT_EQ(static_cast<int>(enumerate_graphs(n, true).size()), connected[n - 1]) << "n = " << n;
    std::set<std::string> forms;
    for (const Graph& g : graphs) forms.insert(canonical_form(g));
    EXPECT_EQ(forms.size(), graphs.size());
    total += static_cast<int>(graphs.size());
  }
  EXPECT_EQ(total, 208);
  EXPECT_THROW(enumerate_graphs(8), std::invalid_argument);
}

TEST(GraphIO, EdgeListRoundTrip) {
  const Graph g = testutil::fixture("family_graph.txt");
  EXPECT_EQ(g.order(), 11);
  EXPECT_EQ(g.size(), 20u);
  EXPECT_EQ(parse_edgelist(to_edgelist(g)), g);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
}

TEST(GraphIO, JsonFixtureMatchesEdgeList) {
  const Graph a = testutil::fixture("family_graph.json");
  EXPECT_EQ(a, testutil::fixture("family_graph.txt"));
  EXPECT_EQ(a.label(8), "I1");
  EXPECT_EQ(testutil::fixture("wl_graph.json"), testutil::fixture("wl_graph.txt"));
}

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(GraphIO, EdgeListErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("n 4\n0 1\n3 3\n"), 3);
  EXPECT_EQ(parse_error_line("n 4\n# c\n\n0 1\n0 1\n"), 5);
  EXPECT_EQ(parse_error_line("n 4\n2 1\n"), 2);
  EXPECT_EQ(parse_error_line("n 4\n0 9\n"), 2);
  EXPECT_EQ(parse_error_line("n 4\n0 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("4\n"), 1);
  EXPECT_EQ(parse_error_line("n 3\n0 1\n"), -1);
}

TEST(GraphIO, JsonErrors) {
  EXPECT_THROW(parse_graph(R"({"n": 3, "edges": [[1, 1]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "edges": [[0, 1], [1, 0]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "labels": ["a"]})"), ParseError);
  EXPECT_EQ(parse_error_line("{\n\"n\": 3,\n\"edges\": [[0 1]]\n}"), 3);
  EXPECT_EQ(parse_graph(R"({"n": 2, "edges": [[0, 1]]})", GraphFormat::json), complete_graph(2));
}
