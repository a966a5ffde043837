#pragma once

#include "bounds.hpp"
#include "budget.hpp"
#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace cyclewidth {

/// Vertex set meeting every cycle of length >= ell.
struct HittingSet {
  VertexSet vertices;
  int ell = 3;
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Exact minimum hitting set for cycles of length >= ell. Among minimum sets
/// the lexicographically smallest (as a sorted sequence) is returned.
HittingSet min_hitting_set_long_cycles(const Graph& g, int ell, Budget& budget);

/// True iff G - x has no cycle of length >= ell.
CheckResult verify_hitting_set(const Graph& g, const VertexSet& x, int ell, Budget& budget);

inline HittingSet min_hitting_set_long_cycles(const Graph& g, int ell) {
  Budget b;
  return min_hitting_set_long_cycles(g, ell, b);
}
inline CheckResult verify_hitting_set(const Graph& g, const VertexSet& x, int ell) {
  Budget b;
  return verify_hitting_set(g, x, ell, b);
}

}  // namespace cyclewidth
