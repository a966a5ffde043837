#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "budget.hpp"
#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace cyclewidth {

/// Cyclic vertex sequence. Library-produced cycles are in canonical rotation:
/// smallest vertex first, then toward its smaller cycle neighbor.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

Cycle canonical_cycle(std::vector<Vertex> vertices);
/// Orders by (length, vertex sequence).
bool cycle_less(const Cycle& a, const Cycle& b);

/// Target H as a multiset of cycle lengths, stored in descending order.
class CycleFamilySpec {
 public:
  /// Throws InvalidArgument on an empty list or any length < 3.
  explicit CycleFamilySpec(std::vector<int> lengths);
  /// Parses "5,3,3".
  static CycleFamilySpec parse(std::string_view text);

  const std::vector<int>& lengths() const { return lengths_; }
  int k() const { return static_cast<int>(lengths_.size()); }
  int h() const;
  int longest() const { return lengths_.front(); }
  /// The spec with one longest cycle removed; requires k() >= 2.
  CycleFamilySpec without_longest() const;
  std::string to_string() const;

  friend bool operator==(const CycleFamilySpec&, const CycleFamilySpec&) = default;

 private:
  std::vector<int> lengths_;
};

struct CyclePacking {
  std::vector<Cycle> cycles;
  int size() const { return static_cast<int>(cycles.size()); }
};

/// Certificate that G contains the disjoint union of cycles in a spec as a
/// minor: `cycles[i]` is matched to `spec.lengths()[assignment[i]]`.
struct MinorModel {
  std::vector<Cycle> cycles;
  std::vector<int> assignment;
};

/// Shortest cycle length, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// Exact. Among cycles with lo <= length <= hi returns the one minimizing
/// (length, canonical sequence). Requires 3 <= lo <= hi.
std::optional<Cycle> find_cycle_in_range(const Graph& g, int lo, int hi, Budget& budget);
/// Some cycle with at least `min_len` vertices (first found, deterministic).
std::optional<Cycle> find_long_cycle(const Graph& g, int min_len, Budget& budget);
/// Exact longest cycle.
std::optional<Cycle> longest_cycle(const Graph& g, Budget& budget);

/// Maximum number of vertex-disjoint cycles of length >= ell. With `stop_at`
/// the search may stop as soon as that many are found.
CyclePacking max_long_cycle_packing(const Graph& g, int ell, std::optional<int> stop_at, Budget& budget);

/// Exact test for the disjoint union of cycles as a minor.
std::optional<MinorModel> has_disjoint_cycles_minor(const Graph& g, const CycleFamilySpec& spec, Budget& budget);

CheckResult verify_cycle(const Graph& g, const Cycle& c);
CheckResult verify_packing(const Graph& g, const CyclePacking& p, int ell);
CheckResult verify_minor_model(const Graph& g, const CycleFamilySpec& spec, const MinorModel& m);

/// One cycle per line, space-separated ids.
std::string format_cycles(const std::vector<Cycle>& cycles);
std::vector<Cycle> parse_cycles(std::string_view text);

// Convenience overloads with a fresh default budget.
inline std::optional<Cycle> find_cycle_in_range(const Graph& g, int lo, int hi) {
  Budget b;
  return find_cycle_in_range(g, lo, hi, b);
}
inline std::optional<Cycle> longest_cycle(const Graph& g) {
  Budget b;
  return longest_cycle(g, b);
}
inline CyclePacking max_long_cycle_packing(const Graph& g, int ell, std::optional<int> stop_at = std::nullopt) {
  Budget b;
  return max_long_cycle_packing(g, ell, stop_at, b);
}
inline std::optional<MinorModel> has_disjoint_cycles_minor(const Graph& g, const CycleFamilySpec& spec) {
  Budget b;
  return has_disjoint_cycles_minor(g, spec, b);
}

}  // namespace cyclewidth
