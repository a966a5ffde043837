#pragma once

// Fixed-width vertex bitsets for the exact solvers. Instances are relabeled to
// 0..n-1 and dispatched to the smallest width that holds them.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "errors.hpp"

namespace cyclewidth::detail {

template <std::size_t Words>
class Bitset {
 public:
  static constexpr int kCapacity = static_cast<int>(Words * 64);

  constexpr Bitset() = default;

  static Bitset prefix(int n) {
    Bitset b;
    for (std::size_t i = 0; i < Words; ++i) {
      const int lo = static_cast<int>(i * 64);
      if (n >= lo + 64) {
        b.w_[i] = ~0ULL;
      } else if (n > lo) {
        b.w_[i] = (1ULL << (n - lo)) - 1;
      }
    }
    return b;
  }
  static Bitset single(int v) {
    Bitset b;
    b.set(v);
    return b;
  }

  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : w_) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  /// Smallest member, or -1.
  int first() const {
    for (std::size_t i = 0; i < Words; ++i) {
      if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    }
    return -1;
  }
  /// Smallest member strictly greater than `i`, or -1.
  int next(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    std::size_t wi = static_cast<std::size_t>(i >> 6);
    std::uint64_t w = w_[wi] & (~0ULL << (i & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
      if (++wi == Words) return -1;
      w = w_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  /// Members strictly greater than `v`.
  Bitset above(int v) const {
    Bitset b = *this;
    for (std::size_t i = 0; i < Words; ++i) {
      const int lo = static_cast<int>(i * 64);
      if (v >= lo + 63) {
        b.w_[i] = 0;
      } else if (v >= lo) {
        b.w_[i] &= ~0ULL << (v - lo + 1);
      }
    }
    return b;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < Words; ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < Words; ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, Words> w_{};
};

template <class B>
struct BitsetHash {
  std::size_t operator()(const B& b) const { return b.hash(); }
};

inline constexpr int kMaxDispatchVertices = 1024;

/// Calls `f.template operator()<W>()` with the smallest W such that 64*W >= n.
template <class F>
decltype(auto) dispatch_width(int n, F&& f) {
  if (n <= 64) return f.template operator()<1>();
  if (n <= 128) return f.template operator()<2>();
  if (n <= 256) return f.template operator()<4>();
  if (n <= 512) return f.template operator()<8>();
  if (n <= kMaxDispatchVertices) return f.template operator()<16>();
  throw BudgetExceeded("instance piece with " + std::to_string(n) +
                       " vertices exceeds exact-solver capacity of " +
                       std::to_string(kMaxDispatchVertices));
}

}  // namespace cyclewidth::detail
