#pragma once

#include <cstdint>

namespace cyclewidth {

/// ceil(10 k log k + 10 k log log k + 40 k) with base-2 logarithms, k >= 2.
std::int64_t log_terms_ceil(std::int64_t k);

/// Size bound for a set meeting all cycles of length >= ell when G has no k
/// disjoint such cycles: 6 k ell + 10 k log k + 10 k log log k + 40 k for
/// k >= 2 (rounded up), and 0 for k = 1.
std::int64_t ep_bound(std::int64_t k, std::int64_t ell);

/// The same bound without the 6 k ell term; valid when G has no cycle whose
/// length lies in [ell, 6 ell].
std::int64_t ep_bound_no_medium(std::int64_t k);

/// Width budget g(h, k) = 6h + 10 k log k + 10 k log log k + 40 k (rounded up).
/// At k = 1 both logarithmic terms are taken as 0, so g(h, 1) = 6h + 40.
std::int64_t g_bound(std::int64_t h, std::int64_t k);

}  // namespace cyclewidth
