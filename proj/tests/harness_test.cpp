#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "errors.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "harness.hpp"
#include "oracles.hpp"

using namespace cyclewidth;

namespace {

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cyclewidth_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    rows.push_back(f);
  }
  return rows;
}

}  // namespace

TEST(Rng, ReferenceOutputs) {
  // SplitMix64(0) seeds xoshiro256**; first outputs of that stream.
  Rng a(0), b(0);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(1);
  EXPECT_NE(Rng(0).next(), c.next());
  Rng d(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = d.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(d.below(7), 7u);
  }
}

TEST(Generators, Examples) {
  auto k5 = complete_graph(5);
  EXPECT_EQ(k5.order(), 5);
  EXPECT_EQ(k5.size(), 10u);
  auto dc = generate({"disjoint-cycles", "5,3"}, 0);
  EXPECT_EQ(dc.order(), 8);
  EXPECT_EQ(dc.size(), 8u);
  EXPECT_EQ(generate({"grid", "3", "4"}, 0), grid_graph(3, 4));
  EXPECT_EQ(petersen_graph().size(), 15u);
}

TEST(Generators, RandomCubicIsThreeRegular) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (int n : {4, 10, 16, 30}) {
      auto g = random_cubic_graph(n, seed);
      ASSERT_EQ(g.order(), n);
      for (int v = 0; v < n; ++v) ASSERT_EQ(g.degree(v), 3);
    }
  }
  auto k4 = random_cubic_graph(4, 1);
  EXPECT_EQ(k4, complete_graph(4));
}

TEST(Generators, Reproducible) {
  EXPECT_EQ(serialize_graph(random_graph(15, 0.3, 42), GraphFormat::Graph6),
            serialize_graph(random_graph(15, 0.3, 42), GraphFormat::Graph6));
  EXPECT_EQ(serialize_graph(random_cubic_graph(12, 9), GraphFormat::PaceGr),
            serialize_graph(random_cubic_graph(12, 9), GraphFormat::PaceGr));
  EXPECT_NE(random_graph(15, 0.3, 42), random_graph(15, 0.3, 43));
}

TEST(Generators, InvalidParameters) {
  EXPECT_THROW(random_cubic_graph(5, 1), InvalidArgument);
  EXPECT_THROW(random_cubic_graph(2, 1), InvalidArgument);
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
  EXPECT_THROW(random_graph(5, 1.5, 0), InvalidArgument);
  EXPECT_THROW(generate({"complete"}, 0), InvalidArgument);
  EXPECT_THROW(generate({"complete", "x"}, 0), InvalidArgument);
  EXPECT_THROW(generate({"moebius", "3"}, 0), InvalidArgument);
  EXPECT_THROW(generate({"disjoint-cycles", "5,2"}, 0), InvalidArgument);
}

TEST(Witness, Examples) {
  Budget b;
  auto r = witness_lower_bound(CycleFamilySpec::parse("3,3"), b);
  EXPECT_EQ(r.graph, complete_graph(5));
  EXPECT_EQ(r.treewidth, 4);
  EXPECT_FALSE(r.minor_found);
  EXPECT_TRUE(r.ok());
  auto r3 = witness_lower_bound(CycleFamilySpec::parse("3"), b);
  EXPECT_EQ(r3.graph.order(), 2);
  EXPECT_EQ(r3.treewidth, 1);
  EXPECT_TRUE(r3.ok());
  auto r7 = witness_lower_bound(CycleFamilySpec::parse("4,3"), b);
  EXPECT_EQ(r7.treewidth, 5);
  EXPECT_TRUE(r7.ok());
  oracle::MinorClosure mc({{4, 3}});
  EXPECT_EQ(mc.minors(oracle::small(r7.graph)), 0u);
  EXPECT_THROW(witness_lower_bound(CycleFamilySpec::parse("6,6"), b), InvalidArgument);
}

TEST(GirthDemo, Examples) {
  EXPECT_EQ(girth_demo({}, {1}, kDefaultBudget), "n,seed,girth,tw_lower_bound,lb_kind\n");
  EXPECT_EQ(girth_demo({4}, {1}, kDefaultBudget), "n,seed,girth,tw_lower_bound,lb_kind\n4,1,3,3,exact\n");
  auto csv = girth_demo({10}, {1, 2, 3}, kDefaultBudget);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) f.push_back(c);
    ASSERT_EQ(f.size(), 5u);
    const int gi = std::stoi(f[2]);
    EXPECT_GE(gi, 3);
    EXPECT_LE(gi, 5);
    EXPECT_GE(std::stoi(f[3]), 3);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(Corpus, Grammar) {
  int count = 0;
  for_each_corpus_graph("connected:4", 0, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 1 + 1 + 2 + 6);
  count = 0;
  for_each_corpus_graph("all:3; g6:Bw ; gen:cycle 6", 0, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 1 + 2 + 4 + 1 + 1);
  EXPECT_THROW(for_each_corpus_graph("bogus:1", 0, [](const Graph&) {}), InvalidArgument);
  EXPECT_THROW(for_each_corpus_graph("connected", 0, [](const Graph&) {}), InvalidArgument);
}

TEST(Sweep, CycleAndForestRows) {
  SweepConfig c;
  c.corpus = "gen:cycle 6;gen:path 5";
  c.ells = {3};
  c.out_path = temp_path("small.csv");
  auto s = run_duality_sweep(c);
  EXPECT_EQ(s.rows, 2);
  EXPECT_EQ(s.violations, 0);
  auto rows = read_csv(c.out_path);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].size(), 17u);
  // graph_id,n,m,ell,nu,tau,ep_bound,treewidth,...
  EXPECT_EQ(rows[1][4], "1");
  EXPECT_EQ(rows[1][5], "1");
  EXPECT_EQ(rows[1][7], "2");
  EXPECT_EQ(rows[2][4], "0");
  EXPECT_EQ(rows[2][5], "0");
  EXPECT_EQ(rows[2][7], "1");
  EXPECT_EQ(rows[1][12], "ok");
  auto v = verify_sweep(c.out_path);
  EXPECT_EQ(v.rows, 2);
  EXPECT_EQ(v.violations, 0);
}

TEST(Sweep, ConnectedUpTo6) {
  SweepConfig c;
  c.corpus = "connected:6";
  c.ells = {4, 5};
  c.out_path = temp_path("connected6.csv");
  auto s = run_duality_sweep(c);
  EXPECT_EQ(s.rows, 2 * (1 + 1 + 2 + 6 + 21 + 112));
  EXPECT_EQ(s.violations, 0);
  EXPECT_EQ(s.budget_rows, 0);
  auto v = verify_sweep(c.out_path);
  EXPECT_EQ(v.violations, 0) << (v.messages.empty() ? "" : v.messages[0]);
}

TEST(Sweep, TamperedCertificateIsCaught) {
  SweepConfig c;
  c.corpus = "gen:complete 5";
  c.ells = {3};
  c.out_path = temp_path("tamper.csv");
  run_duality_sweep(c);
  const std::string cert = c.out_path + ".certs/0.cert";
  std::ifstream in(cert);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  in.close();
  const auto pos = text.find("hitting 3 ");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, text.find('\n', pos) - pos, "hitting 2 0 1");  // leaves the triangle 2,3,4
  std::ofstream(cert) << text;
  auto v = verify_sweep(c.out_path);
  EXPECT_GT(v.violations, 0);
}

TEST(Sweep, BudgetRowsAreFlaggedNotFatal) {
  SweepConfig c;
  c.corpus = "gen:complete 12";
  c.ells = {3};
  c.budget = 5;
  c.out_path = temp_path("budget.csv");
  auto s = run_duality_sweep(c);
  EXPECT_EQ(s.rows, 1);
  EXPECT_EQ(s.budget_rows, 1);
  EXPECT_EQ(s.violations, 0);
  auto rows = read_csv(c.out_path);
  EXPECT_EQ(rows[1][12], "budget");
  EXPECT_EQ(verify_sweep(c.out_path).violations, 0);
}
