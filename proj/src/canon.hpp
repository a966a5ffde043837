#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace cyclewidth {

inline constexpr int kMaxCanonOrder = 11;

/// Graphs on n <= kMaxCanonOrder vertices encoded as upper-triangle bits:
/// pairs (i, j), i < j, ordered by j then i, first pair in the highest bit.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Largest adjacency code over all relabelings; equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Canonical codes of all non-isomorphic graphs on exactly n vertices,
/// ascending. n=9 gives 274668 codes (261080 connected).
std::vector<std::uint64_t> enumerate_graph_codes(int n, bool connected_only);

}  // namespace cyclewidth
