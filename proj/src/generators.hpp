#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cyclewidth {

/// xoshiro256** seeded from SplitMix64(seed). Reals are (x >> 11) * 2^-53;
/// bounded integers use rejection on x mod bound.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();
  std::uint64_t below(std::uint64_t bound);
  /// Independent stream seeded from this one's next output.
  Rng split() { return Rng(next()); }

 private:
  std::uint64_t s_[4];
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// a x b grid, vertex r*b + c.
Graph grid_graph(int a, int b);
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();
/// G(n, p): pairs (i, j), i < j, in lexicographic order; edge iff uniform() < p.
Graph random_graph(int n, double p, std::uint64_t seed);
/// Uniform pairing model on 3n points, rejecting loops and multi-edges.
Graph random_cubic_graph(int n, std::uint64_t seed);
/// Cycles numbered consecutively in the given order.
Graph disjoint_cycles(const std::vector<int>& lengths);

/// Dispatches on a family name and its parameters, e.g. {"grid", "3", "4"}
/// or {"disjoint-cycles", "5,3"}. Random families use `seed`.
Graph generate(const std::vector<std::string>& args, std::uint64_t seed);

}  // namespace cyclewidth
