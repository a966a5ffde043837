#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "canon.hpp"
#include "errors.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "treewidth.hpp"

using namespace cyclewidth;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// Decoded by hand from the graph6 definition: size byte n+63, then the upper
// triangle column by column in 6-bit groups offset by 63.
TEST(Graph6, HandDecodedTable) {
  struct Case {
    const char* text;
    int n;
    std::vector<Edge> edges;
  };
  const std::vector<Case> cases{
      {"?", 0, {}},
      {"@", 1, {}},
      {"A?", 2, {}},
      {"A_", 2, {{0, 1}}},
      {"Bw", 3, {{0, 1}, {0, 2}, {1, 2}}},
      {"Ch", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"C~", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"D?{", 5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}},
      {"D~{", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
  };
  for (const auto& c : cases) {
    auto g = parse_graph6(c.text);
    EXPECT_EQ(g.order(), c.n) << c.text;
    EXPECT_EQ(g.edges(), c.edges) << c.text;
    EXPECT_EQ(to_graph6(g), c.text);
  }
}

TEST(Graph6, AcceptsHeaderAndNewline) {
  auto g = parse_graph6(">>graph6<<Bw\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(serialize_graph(g, GraphFormat::Graph6), "Bw\n");
}

TEST(Graph6, RejectsBadInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);      // too short
  EXPECT_THROW(parse_graph6("D?{?"), ParseError);    // too long
  EXPECT_THROW(parse_graph6("D? {"), ParseError);    // byte outside 63..126
  EXPECT_THROW(parse_graph6("~~?"), ParseError);     // truncated 8-byte header
}

TEST(Graph6, FourByteSizeHeader) {
  auto g = path_graph(70);
  auto s = to_graph6(g);
  EXPECT_EQ(s.substr(0, 4), "~?@E");
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, MultiLine) {
  auto gs = parse_graph6_lines("Bw\n\nA_\n");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1].order(), 2);
}

TEST(PaceGr, HeaderAndEdges) {
  auto g = parse_pace_gr("c comment\np tw 3 2\n1 2\n2 3\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(to_pace_gr(g), "p tw 3 2\n1 2\n2 3\n");
}

TEST(PaceGr, Errors) {
  EXPECT_THROW(parse_pace_gr("p tw 3 2\n1 2\n2\n"), ParseError);  // truncated edge line
  EXPECT_THROW(parse_pace_gr("p tw 3 2\n1 2\n"), ParseError);     // edge count mismatch
  EXPECT_THROW(parse_pace_gr("p tw 3 1\n1 4\n"), ParseError);     // out of range
  EXPECT_THROW(parse_pace_gr("1 2\n"), ParseError);               // no header
  EXPECT_THROW(parse_pace_gr("p td 3 1\n1 2\n"), ParseError);     // wrong problem tag
  EXPECT_THROW(parse_pace_gr("p tw 2 1\n1 1\n"), Error);          // self-loop
}

TEST(PaceTd, RoundTrip) {
  const std::string text = "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n";
  auto parsed = parse_pace_td(text);
  EXPECT_EQ(parsed.n, 4);
  EXPECT_EQ(parsed.td.width(), 1);
  EXPECT_EQ(to_pace_td(parsed.td, parsed.n), text);
  EXPECT_TRUE(validate_td(path_graph(4), parsed.td).ok);
}

TEST(PaceTd, Errors) {
  EXPECT_THROW(parse_pace_td("b 1 1\n"), ParseError);
  EXPECT_THROW(parse_pace_td("s td 2 1 2\nb 1 1\n"), ParseError);         // missing bag 2
  EXPECT_THROW(parse_pace_td("s td 1 1 2\nb 1 3\n"), ParseError);         // vertex out of range
  EXPECT_THROW(parse_pace_td("s td 1 1 1\nb 1 1\n1 2\n"), ParseError);    // edge to unknown bag
}

TEST(Formats, NamesAndDispatch) {
  EXPECT_EQ(parse_format_name("graph6"), GraphFormat::Graph6);
  EXPECT_EQ(parse_format_name("gr"), GraphFormat::PaceGr);
  EXPECT_THROW(parse_format_name("dot"), InvalidArgument);
  auto g = petersen_graph();
  EXPECT_EQ(parse_graph(GraphFormat::PaceGr, serialize_graph(g, GraphFormat::PaceGr)), g);
}

TEST(Formats, ExhaustiveRoundTripUpTo8) {
  for (int n = 0; n <= 8; ++n) {
    for (auto code : enumerate_graph_codes(n, false)) {
      auto g = graph_from_code(n, code);
      ASSERT_EQ(parse_graph6(to_graph6(g)), g);
      ASSERT_EQ(parse_pace_gr(to_pace_gr(g)), g);
    }
  }
}

TEST(Formats, GoldenCorpusByteExact) {
  std::istringstream index(read(std::string(GOLDEN_DIR) + "/index.txt"));
  int count = 0;
  for (std::string name; std::getline(index, name);) {
    const std::string base = std::string(GOLDEN_DIR) + "/" + name;
    const auto g6 = read(base + ".g6"), gr = read(base + ".gr"), td = read(base + ".td");
    auto g = parse_graph6(g6);
    EXPECT_EQ(serialize_graph(g, GraphFormat::Graph6), g6) << name;
    EXPECT_EQ(to_pace_gr(parse_pace_gr(gr)), gr) << name;
    EXPECT_EQ(parse_pace_gr(gr), g) << name;
    auto parsed = parse_pace_td(td);
    EXPECT_EQ(to_pace_td(parsed.td, parsed.n), td) << name;
    EXPECT_TRUE(validate_td(g, parsed.td).ok) << name;
    ++count;
  }
  EXPECT_EQ(count, 50);
}
