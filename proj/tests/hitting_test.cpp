#include <gtest/gtest.h>

#include "bounds.hpp"
#include "canon.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "hitting.hpp"
#include "oracles.hpp"

using namespace cyclewidth;

TEST(HittingSet, Examples) {
  EXPECT_EQ(min_hitting_set_long_cycles(disjoint_cycles({3, 3}), 3).size(), 2);
  EXPECT_EQ(min_hitting_set_long_cycles(cycle_graph(6), 3).size(), 1);
  auto forest = min_hitting_set_long_cycles(path_graph(7), 4);
  EXPECT_EQ(forest.size(), 0);
  EXPECT_TRUE(forest.vertices.empty());
}

TEST(HittingSet, LexicographicallySmallestAmongMinimum) {
  auto x = min_hitting_set_long_cycles(disjoint_cycles({3, 3}), 3);
  EXPECT_EQ(x.vertices, (VertexSet{0, 3}));
  // Only cycles of length >= 4 matter: the triangle on 0..2 is ignored.
  auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  EXPECT_EQ(min_hitting_set_long_cycles(g, 4).vertices, (VertexSet{3}));
}

TEST(HittingSet, PetersenNeedsThreeForLength5) {
  auto g = petersen_graph();
  auto x = min_hitting_set_long_cycles(g, 5);
  EXPECT_EQ(x.size(), oracle::hitting_number(oracle::small(g), 5));
  EXPECT_TRUE(verify_hitting_set(g, x.vertices, 5).ok);
}

TEST(VerifyHittingSet, Examples) {
  auto g = disjoint_cycles({3, 3});
  EXPECT_TRUE(verify_hitting_set(g, VertexSet{0, 3}, 3).ok);
  auto bad = verify_hitting_set(g, VertexSet{0, 1}, 3);
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.reason.find("3"), std::string::npos);
  auto p = petersen_graph();
  EXPECT_TRUE(verify_hitting_set(p, VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 3).ok);
}

TEST(HittingSet, RejectsBadEll) { EXPECT_THROW(min_hitting_set_long_cycles(cycle_graph(4), 2), InvalidArgument); }

class HittingOracle : public ::testing::TestWithParam<int> {};

TEST_P(HittingOracle, ExactAndWithinBounds) {
  const int n = GetParam();
  for (auto code : enumerate_graph_codes(n, false)) {
    const auto g = graph_from_code(n, code);
    const auto s = oracle::small(g);
    for (int ell = 3; ell <= 5; ++ell) {
      auto x = min_hitting_set_long_cycles(g, ell);
      const int tau = oracle::hitting_number(s, ell);
      const int nu = oracle::packing_number(s, ell);
      ASSERT_EQ(x.size(), tau) << code << " ell=" << ell;
      ASSERT_TRUE(verify_hitting_set(g, x.vertices, ell).ok);
      ASSERT_LE(nu, tau);
      ASSERT_LE(tau, ep_bound(nu + 1, ell));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, HittingOracle, ::testing::Range(3, 9));
