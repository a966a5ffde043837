#include <gtest/gtest.h>

#include "canon.hpp"
#include "cycles.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclewidth;

TEST(Spec, ParsesAndSortsDescending) {
  auto s = CycleFamilySpec::parse("3,5,3");
  EXPECT_EQ(s.lengths(), (std::vector<int>{5, 3, 3}));
  EXPECT_EQ(s.h(), 11);
  EXPECT_EQ(s.k(), 3);
  EXPECT_EQ(s.longest(), 5);
  EXPECT_EQ(s.without_longest().lengths(), (std::vector<int>{3, 3}));
  EXPECT_EQ(s.to_string(), "5,3,3");
  EXPECT_THROW(CycleFamilySpec::parse(""), InvalidArgument);
  EXPECT_THROW(CycleFamilySpec::parse("2,3"), InvalidArgument);
  EXPECT_THROW(CycleFamilySpec::parse("3,x"), InvalidArgument);
}

TEST(Girth, Examples) {
  EXPECT_FALSE(girth(path_graph(5)).has_value());
  EXPECT_EQ(girth(petersen_graph()), 5);
  EXPECT_EQ(girth(complete_graph(4)), 3);
  EXPECT_EQ(girth(grid_graph(3, 3)), 4);
}

TEST(FindCycleInRange, Examples) {
  EXPECT_FALSE(find_cycle_in_range(cycle_graph(10), 3, 6).has_value());
  auto c5 = find_cycle_in_range(cycle_graph(5), 3, 6);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  auto k4 = find_cycle_in_range(complete_graph(4), 4, 4);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(FindCycleInRange, ReturnsShortestLexMin) {
  // K_5 with lo=4: the smallest cycle of length 4 in canonical order.
  auto c = find_cycle_in_range(complete_graph(5), 4, 5);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(LongestCycle, Examples) {
  EXPECT_FALSE(longest_cycle(path_graph(6)).has_value());
  EXPECT_EQ(longest_cycle(complete_graph(5))->length(), 5);
  EXPECT_EQ(longest_cycle(petersen_graph())->length(), 9);
  EXPECT_EQ(longest_cycle(disjoint_cycles({4, 7, 5}))->length(), 7);
}

TEST(Packing, Examples) {
  EXPECT_EQ(max_long_cycle_packing(disjoint_cycles({5, 5}), 4).size(), 2);
  EXPECT_EQ(max_long_cycle_packing(complete_graph(7), 3).size(), 2);
  EXPECT_EQ(max_long_cycle_packing(path_graph(8), 3).size(), 0);
  EXPECT_GE(max_long_cycle_packing(complete_graph(9), 3, 2).size(), 2);  // may stop once 2 are found
}

TEST(Minor, Examples) {
  auto two = CycleFamilySpec::parse("3,3");
  auto m = has_disjoint_cycles_minor(complete_graph(6), two);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(verify_minor_model(complete_graph(6), two, *m).ok);
  EXPECT_FALSE(has_disjoint_cycles_minor(complete_graph(5), two).has_value());

  auto spec = CycleFamilySpec::parse("5,3");
  auto g = disjoint_cycles({6, 3});
  auto m2 = has_disjoint_cycles_minor(g, spec);
  ASSERT_TRUE(m2.has_value());
  EXPECT_TRUE(verify_minor_model(g, spec, *m2).ok);
  for (std::size_t i = 0; i < m2->cycles.size(); ++i) {
    EXPECT_EQ(m2->cycles[i].length(), m2->assignment[i] == 0 ? 6 : 3);
  }
}

TEST(Verify, PackingExamples) {
  auto g = disjoint_cycles({5, 5});
  CyclePacking p{{Cycle{{0, 1, 2, 3, 4}}, Cycle{{5, 6, 7, 8, 9}}}};
  EXPECT_TRUE(verify_packing(g, p, 4).ok);
  EXPECT_FALSE(verify_packing(g, p, 6).ok);
  auto k5 = complete_graph(5);
  CyclePacking overlap{{Cycle{{0, 1, 2}}, Cycle{{2, 3, 4}}}};
  EXPECT_FALSE(verify_packing(k5, overlap, 3).ok);
  CyclePacking not_cycle{{Cycle{{0, 1, 2, 3}}}};
  EXPECT_FALSE(verify_packing(path_graph(4), not_cycle, 3).ok);
}

TEST(Verify, MinorModelRejectsBadModels) {
  auto spec = CycleFamilySpec::parse("4,3");
  auto g = disjoint_cycles({4, 3});
  MinorModel swapped{{Cycle{{0, 1, 2, 3}}, Cycle{{4, 5, 6}}}, {1, 0}};
  EXPECT_FALSE(verify_minor_model(g, spec, swapped).ok);  // 3-cycle cannot model C_4
  MinorModel good{{Cycle{{0, 1, 2, 3}}, Cycle{{4, 5, 6}}}, {0, 1}};
  EXPECT_TRUE(verify_minor_model(g, spec, good).ok);
  MinorModel missing{{Cycle{{0, 1, 2, 3}}}, {0}};
  EXPECT_FALSE(verify_minor_model(g, spec, missing).ok);
}

TEST(CycleText, RoundTrip) {
  std::vector<Cycle> cs{Cycle{{0, 1, 2}}, Cycle{{3, 4, 5, 6}}};
  EXPECT_EQ(parse_cycles(format_cycles(cs)), cs);
  EXPECT_THROW(parse_cycles("0 1 x\n"), ParseError);
}

TEST(Budget, ExhaustionThrows) {
  Budget b(10);
  EXPECT_THROW(max_long_cycle_packing(complete_graph(12), 3, std::nullopt, b), BudgetExceeded);
}

TEST(Capacity, TooManyVerticesIsBudgetError) {
  Budget b;
  EXPECT_THROW(find_cycle_in_range(cycle_graph(1100), 3, 5, b), BudgetExceeded);
}

class CycleOracle : public ::testing::TestWithParam<int> {};

TEST_P(CycleOracle, AgreesWithBruteForceOnAllGraphs) {
  const int n = GetParam();
  for (auto code : enumerate_graph_codes(n, false)) {
    const auto g = graph_from_code(n, code);
    const auto s = oracle::small(g);
    const auto ham = oracle::hamiltonian_subsets(s);
    std::vector<char> has_len(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t m = 0; m < ham.size(); ++m) {
      if (ham[m]) has_len[static_cast<std::size_t>(std::popcount(static_cast<oracle::Mask>(m)))] = 1;
    }
    int circ = 0, gi = 0;
    for (int L = 3; L <= n; ++L) {
      if (has_len[static_cast<std::size_t>(L)]) {
        circ = L;
        if (!gi) gi = L;
      }
    }
    const auto lc = longest_cycle(g);
    ASSERT_EQ(lc ? lc->length() : 0, circ) << code;
    ASSERT_EQ(girth(g).value_or(0), gi);
    for (int lo = 3; lo <= n; ++lo) {
      for (int hi = lo; hi <= n; ++hi) {
        bool any = false;
        for (int L = lo; L <= hi; ++L) any = any || has_len[static_cast<std::size_t>(L)];
        auto c = find_cycle_in_range(g, lo, hi);
        ASSERT_EQ(c.has_value(), any);
        if (c) {
          ASSERT_TRUE(oracle::is_cycle(s, c->vertices));
          ASSERT_GE(c->length(), lo);
          ASSERT_LE(c->length(), hi);
        }
      }
    }
    for (int ell = 3; ell <= 5; ++ell) {
      auto p = max_long_cycle_packing(g, ell);
      ASSERT_EQ(p.size(), oracle::packing_number(s, ell));
      ASSERT_TRUE(verify_packing(g, p, ell).ok);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, CycleOracle, ::testing::Range(3, 9));
