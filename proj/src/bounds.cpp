#include "bounds.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace cyclewidth {

namespace {

void require_k(std::int64_t k) {
  if (k < 1) throw InvalidArgument("cycle count k must be >= 1, got " + std::to_string(k));
}

}  // namespace

std::int64_t log_terms_ceil(std::int64_t k) {
  if (k < 2) throw InvalidArgument("log terms need k >= 2");
  const auto uk = static_cast<std::uint64_t>(k);
  if (std::has_single_bit(uk)) {
    const auto a = static_cast<std::uint64_t>(std::countr_zero(uk));  // log k
    if (std::has_single_bit(a)) {
      const auto b = static_cast<std::int64_t>(std::countr_zero(a));  // log log k
      return 10 * k * static_cast<std::int64_t>(a) + 10 * k * b + 40 * k;
    }
  }
  // Otherwise log log k (or log k) is irrational and the sum is not an integer.
  const long double kk = static_cast<long double>(k);
  const long double lg = std::log2(kk);
  const long double x = 10.0L * kk * lg + 10.0L * kk * std::log2(lg) + 40.0L * kk;
  return static_cast<std::int64_t>(std::ceil(x));
}

std::int64_t ep_bound(std::int64_t k, std::int64_t ell) {
  require_k(k);
  if (ell < 3) throw InvalidArgument("ell must be >= 3");
  if (k == 1) return 0;
  return 6 * k * ell + log_terms_ceil(k);
}

std::int64_t ep_bound_no_medium(std::int64_t k) {
  require_k(k);
  if (k == 1) return 0;
  return log_terms_ceil(k);
}

std::int64_t g_bound(std::int64_t h, std::int64_t k) {
  require_k(k);
  if (h < 0) throw InvalidArgument("h must be >= 0");
  if (k == 1) return 6 * h + 40;
  return 6 * h + log_terms_ceil(k);
}

}  // namespace cyclewidth
