#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace cyclewidth {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Search-node counter shared by every subroutine of one top-level call.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) {
      throw BudgetExceeded("search budget of " + std::to_string(limit_) + " nodes exceeded");
    }
  }
  bool exhausted() const { return used_ >= limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace cyclewidth
