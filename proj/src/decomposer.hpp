#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bounds.hpp"
#include "budget.hpp"
#include "cycles.hpp"
#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace cyclewidth {

/// One step of the recursion, in original vertex ids.
struct BranchRecord {
  enum class Kind {
    BaseCase,            // k = 1: circumference < ell, decomposed directly
    MediumCycleRemoved,  // a cycle with length in [ell, 6 ell] was deleted
    HittingSet,          // no medium cycle: X meets all cycles of length >= ell
  };
  Kind kind = Kind::BaseCase;
  int ell = 3;
  int window_hi = 0;             // MediumCycleRemoved: 6 ell
  std::vector<Vertex> vertices;  // the removed cycle, or X
  int packing = 0;               // HittingSet: r, the maximum long-cycle packing size

  friend bool operator==(const BranchRecord&, const BranchRecord&) = default;
};

struct Decomposition {
  TreeDecomposition td;
  std::int64_t claimed_bound = 0;
};

struct Outcome {
  std::variant<MinorModel, Decomposition> result;
  std::vector<BranchRecord> trace;

  bool is_minor() const { return std::holds_alternative<MinorModel>(result); }
  const MinorModel& minor() const { return std::get<MinorModel>(result); }
  const Decomposition& decomposition() const { return std::get<Decomposition>(result); }
};

/// Either a model of the spec as a minor of g, or a tree decomposition of g of
/// width at most g_bound(h, k). A decomposition may be returned even when g
/// contains the minor; the width bound holds regardless.
Outcome decompose(const Graph& g, const CycleFamilySpec& spec, Budget& budget);

inline Outcome decompose(const Graph& g, const CycleFamilySpec& spec) {
  Budget b;
  return decompose(g, spec, b);
}

/// Checks an outcome against the original graph and spec.
CheckResult verify_outcome(const Graph& g, const CycleFamilySpec& spec, const Outcome& o);

/// Sum of per-step width contributions: 6 ell per medium-cycle removal,
/// |X| + ell - 2 at a hitting-set leaf, ell - 2 at a base case.
std::int64_t trace_width_bound(const std::vector<BranchRecord>& trace);

/// Text certificate: "MINOR" + one cycle per line (in spec order), or
/// "TD <width> <bound>" + a PACE .td body; then one "TRACE" line per record.
std::string format_outcome(const Outcome& o, int n);
Outcome parse_outcome(std::string_view text);

}  // namespace cyclewidth
