#include <gtest/gtest.h>

#include "canon.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "tree_decomposition.hpp"

using namespace cyclewidth;

TEST(FromEdges, Triangle) {
  auto g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(FromEdges, DuplicateAndReversedEdgesCollapse) {
  auto g = Graph::from_edges(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
}

TEST(FromEdges, RejectsSelfLoopAndOutOfRange) {
  EXPECT_THROW(Graph::from_edges(1, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(2, {{-1, 0}}), InvalidArgument);
}

TEST(FromEdges, NeighborListsAscending) {
  auto g = Graph::from_edges(4, {{3, 0}, {0, 2}, {1, 0}});
  auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 2, 3}));
}

TEST(DeleteVertices, TriangleMinusOneVertex) {
  auto r = delete_vertices(cycle_graph(3), VertexSet{0});
  EXPECT_EQ(r.graph.order(), 2);
  EXPECT_EQ(r.graph.size(), 1u);
  EXPECT_EQ(r.to_original, (std::vector<Vertex>{1, 2}));
}

TEST(DeleteVertices, EmptySetIsIdentity) {
  auto g = petersen_graph();
  auto r = delete_vertices(g, VertexSet{});
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.graph.size(), g.size());
  for (int v = 0; v < g.order(); ++v) EXPECT_EQ(r.to_original[static_cast<std::size_t>(v)], v);
}

TEST(DeleteVertices, C5MinusTwoAdjacentIsP3) {
  auto r = delete_vertices(cycle_graph(5), VertexSet{0, 1});
  EXPECT_EQ(r.graph, path_graph(3));
  EXPECT_EQ(r.to_original, (std::vector<Vertex>{2, 3, 4}));
}

TEST(DeleteVertices, AllVerticesGivesEmptyGraph) {
  auto g = complete_graph(4);
  auto r = delete_vertices(g, VertexSet{0, 1, 2, 3});
  EXPECT_EQ(r.graph.order(), 0);
}

TEST(InducedSubgraph, KeepsOrder) {
  auto r = induced_subgraph(cycle_graph(6), VertexSet{5, 0, 1});
  EXPECT_EQ(r.to_original, (std::vector<Vertex>{0, 1, 5}));
  EXPECT_EQ(r.graph.size(), 2u);
}

TEST(Components, TwoTriangles) {
  auto c = connected_components(disjoint_cycles({3, 3}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(c[1], (VertexSet{3, 4, 5}));
}

TEST(Components, EmptyGraph) { EXPECT_TRUE(connected_components(empty_graph(0)).empty()); }

TEST(Components, K4) {
  auto c = connected_components(complete_graph(4));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (VertexSet{0, 1, 2, 3}));
}

TEST(Components, PartitionVerticesOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (auto code : enumerate_graph_codes(n, false)) {
      auto g = graph_from_code(n, code);
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (const auto& c : connected_components(g)) {
        for (Vertex v : c) ++seen[static_cast<std::size_t>(v)];
      }
      for (int s : seen) ASSERT_EQ(s, 1);
    }
  }
}

TEST(Blocks, BowtieHasTwoTriangleBlocks) {
  auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  auto b = biconnected_blocks(g);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(b[1], (VertexSet{2, 3, 4}));
}

TEST(Blocks, PathGivesBridges) {
  auto b = biconnected_blocks(path_graph(4));
  EXPECT_EQ(b.size(), 3u);
  for (const auto& blk : b) EXPECT_EQ(blk.size(), 2u);
}

TEST(VertexSetType, SortsAndDeduplicates) {
  VertexSet s{3, 1, 3, 2};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
}

TEST(ValidateTd, SingleBagIsValid) {
  auto g = petersen_graph();
  TreeDecomposition td;
  td.bags = {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  EXPECT_TRUE(validate_td(g, td).ok);
  EXPECT_EQ(td.width(), 9);
}

TEST(ValidateTd, PathDecompositionOfP4) {
  auto g = path_graph(4);
  TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  EXPECT_TRUE(validate_td(g, td).ok);
  EXPECT_EQ(td.width(), 1);
  td.bags[1] = {2};
  EXPECT_FALSE(validate_td(g, td).ok);
}

TEST(ValidateTd, DetectsIncoherenceAndCycles) {
  auto g = path_graph(3);
  TreeDecomposition incoherent{{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}};
  EXPECT_FALSE(validate_td(g, incoherent).ok);
  TreeDecomposition cyclic{{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_FALSE(validate_td(g, cyclic).ok);
  TreeDecomposition forest{{{0, 1}, {1, 2}}, {}};
  EXPECT_FALSE(validate_td(g, forest).ok);
}

TEST(ValidateTd, EmptyGraphNeedsNoBags) {
  EXPECT_TRUE(validate_td(empty_graph(0), TreeDecomposition{}).ok);
  EXPECT_FALSE(validate_td(empty_graph(1), TreeDecomposition{}).ok);
}

TEST(AddToAllBags, P3PlusTwoVertices) {
  // P_3 on original vertices {0,1,2}; s = {3,4}.
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  auto out = td_add_to_all_bags(td, VertexSet{3, 4}, {0, 1, 2});
  EXPECT_EQ(out.width(), 3);
  std::vector<Edge> e{{0, 1}, {1, 2}};
  for (int v : {0, 1, 2}) {
    e.emplace_back(v, 3);
    e.emplace_back(v, 4);
  }
  e.emplace_back(3, 4);
  EXPECT_TRUE(validate_td(Graph::from_edges(5, e), out).ok);
}

TEST(AddToAllBags, EmptySetRelabels) {
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  auto out = td_add_to_all_bags(td, VertexSet{}, {2, 5, 7});
  EXPECT_EQ(out.width(), 1);
  EXPECT_EQ(out.bags[0], (std::vector<Vertex>{2, 5}));
  EXPECT_EQ(out.bags[1], (std::vector<Vertex>{5, 7}));
}

TEST(AddToAllBags, K3IntoK4) {
  TreeDecomposition td{{{0, 1, 2}}, {}};
  auto out = td_add_to_all_bags(td, VertexSet{3}, {0, 1, 2});
  ASSERT_EQ(out.bags.size(), 1u);
  EXPECT_EQ(out.bags[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(out.width(), 3);
  EXPECT_TRUE(validate_td(complete_graph(4), out).ok);
}

TEST(AddToAllBags, RejectsIdCollision) {
  TreeDecomposition td{{{0, 1}}, {}};
  EXPECT_THROW(td_add_to_all_bags(td, VertexSet{1}, {0, 1}), InvalidArgument);
}

TEST(Canon, KnownCountsOfNonIsomorphicGraphs) {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_graph_codes(n, false).size(), all[static_cast<std::size_t>(n - 1)]) << n;
    EXPECT_EQ(enumerate_graph_codes(n, true).size(), connected[static_cast<std::size_t>(n - 1)]) << n;
  }
}

TEST(Canon, InvariantUnderRelabeling) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(10));
    auto g = random_graph(n, 0.4, rng.next());
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    auto h = Graph::from_edges(static_cast<std::size_t>(n), e);
    ASSERT_EQ(canonical_code(g), canonical_code(h));
  }
}

TEST(Canon, CodeRoundTrip) {
  auto g = petersen_graph();
  EXPECT_EQ(graph_from_code(10, adjacency_code(g)), g);
  EXPECT_THROW(adjacency_code(empty_graph(12)), InvalidArgument);
}
