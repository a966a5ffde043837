#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cyclewidth {

/// Tree of bags. Node ids are 0..bags.size()-1; each bag is kept ascending.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> edges;

  /// Largest bag size minus one; -1 when there are no non-empty bags.
  int width() const;
  std::size_t max_bag_size() const;
  /// Sorts every bag and normalizes tree edges to (lo, hi), sorted.
  void normalize();
};

struct CheckResult {
  bool ok = true;
  std::string reason;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Checks the tree shape plus vertex coverage, edge coverage and coherence.
/// The first violated condition is named in `reason`.
CheckResult validate_td(const Graph& g, const TreeDecomposition& td);

/// Lifts a decomposition of G - s back to G: every bag id is translated
/// through `to_original` and `s` (original ids) is added to every bag.
/// Throws InvalidArgument when `s` meets the image of `to_original`.
TreeDecomposition td_add_to_all_bags(const TreeDecomposition& td, const VertexSet& s,
                                     const std::vector<Vertex>& to_original);

}  // namespace cyclewidth
