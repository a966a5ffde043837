#pragma once

#include <vector>

#include "budget.hpp"
#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace cyclewidth {

struct TreewidthOptions {
  /// Components up to this size use the subset DP; larger ones branch and bound.
  int dp_cutoff = 22;
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition td;
  /// False when the budget ran out; `td` is then the best upper bound found.
  bool exact = true;
};

/// Exact treewidth with a witnessing decomposition. Each connected component
/// is solved separately over elimination orderings; component trees are
/// joined root to root.
TreewidthResult exact_treewidth(const Graph& g, Budget& budget, const TreewidthOptions& options = {});

/// Decomposition induced by eliminating vertices in `order` (a permutation).
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Width of the elimination ordering (max higher-degree in the filled graph).
int ordering_width(const Graph& g, const std::vector<Vertex>& order);

/// Greedy min-fill elimination ordering (ties: lower degree, then lower id).
std::vector<Vertex> min_fill_ordering(const Graph& g);

/// Minor-min-width lower bound on treewidth.
int minor_min_width(const Graph& g);

/// Decomposition of width <= ell - 2 for a graph with no cycle of length
/// >= ell. Throws PreconditionViolated (with the cycle) if one exists, and
/// TheoremViolation if the optimum were ever wider than ell - 2.
TreeDecomposition birmele_decomposition(const Graph& g, int ell, Budget& budget);

inline TreewidthResult exact_treewidth(const Graph& g) {
  Budget b;
  return exact_treewidth(g, b);
}

}  // namespace cyclewidth
