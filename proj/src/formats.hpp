#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace cyclewidth {

enum class GraphFormat { Graph6, PaceGr };

/// Accepts "graph6"/"g6" and "gr"/"dimacs-gr"/"pace".
GraphFormat parse_format_name(std::string_view name);

/// Parses a single graph. graph6 accepts an optional ">>graph6<<" prefix and
/// trailing whitespace; PACE .gr accepts "c" comment lines.
Graph parse_graph(GraphFormat format, std::string_view bytes);
/// Canonical serialization; every line (including the last) ends in '\n'.
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);  // no trailing newline
/// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

Graph parse_pace_gr(std::string_view text);
std::string to_pace_gr(const Graph& g);

/// PACE 2017 .td: "s td <bags> <max bag size> <n>", "b <id> <v...>" lines,
/// then tree edges, all 1-based. Returned bags use 0-based vertex ids.
struct ParsedTd {
  TreeDecomposition td;
  int n = 0;
};
ParsedTd parse_pace_td(std::string_view text);
std::string to_pace_td(const TreeDecomposition& td, int n);

}  // namespace cyclewidth
