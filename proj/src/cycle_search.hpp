#pragma once

// Exact DFS cycle searches over bitset adjacency. All searches run inside an
// `allowed` vertex mask so callers can work on G - X without rebuilding.

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "bitset.hpp"
#include "budget.hpp"
#include "graph.hpp"

namespace cyclewidth::detail {

template <std::size_t W>
class CycleSearch {
 public:
  using Set = Bitset<W>;
  using Path = std::vector<int>;

  CycleSearch(const std::vector<Set>& adj, Budget& budget) : adj_(adj), budget_(budget) {}

  /// Lexicographically least cycle with exactly `len` vertices. The sequence
  /// starts at its smallest vertex and heads toward the smaller neighbor.
  std::optional<Path> lexmin_exact(const Set& allowed, int len) {
    return rooted(allowed, Mode::First, len, len);
  }

  /// First cycle in DFS order with length in [lo, hi].
  std::optional<Path> any_in_range(const Set& allowed, int lo, int hi) {
    return rooted(allowed, Mode::First, lo, hi);
  }

  /// Shortest cycle with length in [lo, hi]; lexicographically least among those.
  std::optional<Path> shortest_in_range(const Set& allowed, int lo, int hi) {
    auto some = any_in_range(allowed, lo, hi);
    if (!some) return std::nullopt;
    const int found = static_cast<int>(some->size());
    int start = lo;
    if (auto gi = girth(allowed)) start = std::max(start, *gi);
    for (int len = start; len < found; ++len) {
      if (auto c = lexmin_exact(allowed, len)) return c;
    }
    return lexmin_exact(allowed, found);
  }

  /// A longest cycle strictly longer than `at_least` (or none).
  std::optional<Path> longest(const Set& allowed, int at_least = 2) {
    best_ = at_least;
    longest_found_.reset();
    rooted(allowed, Mode::Longest, 3, std::numeric_limits<int>::max());
    return longest_found_;
  }

  /// Shortest cycle length inside `allowed`.
  std::optional<int> girth(const Set& allowed) const {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(adj_.size(), -1), parent(adj_.size(), -1);
    std::vector<int> queue;
    allowed.for_each([&](int root) {
      std::fill(dist.begin(), dist.end(), -1);
      queue.clear();
      queue.push_back(root);
      dist[static_cast<std::size_t>(root)] = 0;
      parent[static_cast<std::size_t>(root)] = -1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        const int dv = dist[static_cast<std::size_t>(v)];
        if (2 * dv + 1 >= best) break;
        (adj_[static_cast<std::size_t>(v)] & allowed).for_each([&](int w) {
          const auto wi = static_cast<std::size_t>(w);
          if (dist[wi] < 0) {
            dist[wi] = dv + 1;
            parent[wi] = v;
            queue.push_back(w);
          } else if (parent[static_cast<std::size_t>(v)] != w) {
            best = std::min(best, dv + dist[wi] + 1);
          }
        });
      }
    });
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
  }

  /// Cycles through `v` with at least `min_len` vertices whose vertex sets are
  /// inclusion-minimal among such cycles, plus possibly a few non-minimal ones.
  /// Any long cycle through v contains the vertex set of a returned cycle,
  /// or contains a long cycle avoiding v. Sorted by (length, sequence).
  std::vector<Path> minimal_through(const Set& allowed, int v, int min_len) {
    std::vector<Path> found;
    if (!allowed.test(v)) return found;
    root_ = v;
    min_len_ = min_len;
    avail_ = allowed - Set::single(v);
    closers_ = adj_[static_cast<std::size_t>(v)] & avail_;
    if (closers_.count() < 2) return found;
    Set comp = reach(adj_, v, allowed);
    if (comp.count() < min_len) return found;
    path_.assign(1, v);
    on_path_ = Set{};
    prefix_.assign(1, Set{});
    collected_ = &found;
    closers_.for_each([&](int p1) {
      path_.resize(1);
      prefix_.resize(1);
      push(p1);
      through_dfs(p1, 1);
      pop();
    });
    collected_ = nullptr;

    std::sort(found.begin(), found.end(), [](const Path& a, const Path& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    std::vector<Path> kept;
    std::vector<Set> kept_sets;
    for (auto& c : found) {
      Set s;
      for (int x : c) s.set(x);
      bool dominated = false;
      for (const auto& k : kept_sets) {
        if (k.subset_of(s)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        kept_sets.push_back(s);
        kept.push_back(std::move(c));
      }
    }
    return kept;
  }

 private:
  enum class Mode { First, Longest };

  std::optional<Path> rooted(const Set& allowed, Mode mode, int lo, int hi) {
    mode_ = mode;
    lo_ = lo;
    hi_ = hi;
    first_found_.reset();
    const int size = allowed.count();
    if (size < lo) return std::nullopt;
    dist_.assign(adj_.size(), kFar);
    for (int s = allowed.first(); s >= 0; s = allowed.next(s)) {
      avail_ = allowed.above(s);
      closers_ = adj_[static_cast<std::size_t>(s)] & avail_;
      if (closers_.count() < 2) continue;
      Set with_root = avail_ | Set::single(s);
      Set comp = reach(adj_, s, with_root);
      const int comp_size = comp.count();
      if (mode == Mode::First && comp_size < lo) continue;
      if (mode == Mode::Longest && comp_size <= best_) continue;
      bfs_from(s, comp);
      root_ = s;
      path_.assign(1, s);
      on_path_ = Set{};
      const int last_closer = last_member(closers_);
      bool done = false;
      closers_.for_each([&](int p1) {
        if (done || p1 >= last_closer) return;
        path_.resize(1);
        path_.push_back(p1);
        on_path_.set(p1);
        done = rooted_dfs(p1, 1);
        on_path_.reset(p1);
      });
      // In longest mode `done` only means this root's component is Hamiltonian.
      if (done && mode == Mode::First) break;
    }
    if (mode == Mode::First) return first_found_;
    return std::nullopt;
  }

  // Returns true when the whole search should stop.
  bool rooted_dfs(int u, int d) {
    budget_.charge();
    if (d >= 2 && closers_.test(u) && u > path_[1]) {
      const int len = d + 1;
      if (mode_ == Mode::First) {
        if (len >= lo_ && len <= hi_) {
          first_found_ = path_;
          return true;
        }
      } else if (len > best_) {
        best_ = len;
        longest_found_ = path_;
        if (len == limit_) return true;
      }
    }
    if (d + 1 >= hi_) return false;
    const Set free = avail_ - on_path_;
    const Set closers_left = closers_.above(path_[1]) & free;
    if (closers_left.none()) return false;
    if (mode_ == Mode::Longest || lo_ > d + 2) {
      Set r = reach(adj_, u, free | Set::single(u));
      if (!r.intersects(closers_left)) return false;
      const int max_len = d + r.count();
      if (mode_ == Mode::First && max_len < lo_) return false;
      if (mode_ == Mode::Longest && max_len <= best_) return false;
    }
    const Set cand = adj_[static_cast<std::size_t>(u)] & free;
    for (int w = cand.first(); w >= 0; w = cand.next(w)) {
      const int dw = dist_[static_cast<std::size_t>(w)];
      if (dw == kFar || d + 1 + dw > hi_) continue;
      path_.push_back(w);
      on_path_.set(w);
      const bool stop = rooted_dfs(w, d + 1);
      on_path_.reset(w);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  void through_dfs(int u, int d) {
    budget_.charge();
    // A chord back to path_[i], 1 <= i <= d-min_len+1, closes a long cycle that
    // avoids the root; every completion is then dominated.
    if (d - min_len_ + 1 >= 1 && adj_[static_cast<std::size_t>(u)].intersects(prefix_[static_cast<std::size_t>(d - min_len_ + 1)])) {
      return;
    }
    if (d >= 2 && closers_.test(u) && d + 1 >= min_len_) {
      if (u > path_[1]) collected_->push_back(path_);
      return;
    }
    const Set free = avail_ - on_path_;
    const Set closers_left = closers_.above(path_[1]) & free;
    if (closers_left.none()) return;
    if (min_len_ > d + 2) {
      Set r = reach(adj_, u, free | Set::single(u));
      if (!r.intersects(closers_left)) return;
      if (d + r.count() < min_len_) return;
    }
    const Set cand = adj_[static_cast<std::size_t>(u)] & free;
    for (int w = cand.first(); w >= 0; w = cand.next(w)) {
      push(w);
      through_dfs(w, d + 1);
      pop();
    }
  }

  void push(int w) {
    path_.push_back(w);
    on_path_.set(w);
    prefix_.push_back(prefix_.back() | Set::single(w));
  }
  void pop() {
    on_path_.reset(path_.back());
    path_.pop_back();
    prefix_.pop_back();
  }

  void bfs_from(int s, const Set& within) {
    limit_ = within.count();
    within.for_each([&](int v) { dist_[static_cast<std::size_t>(v)] = kFar; });
    std::vector<int> queue{s};
    dist_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      (adj_[static_cast<std::size_t>(v)] & within).for_each([&](int w) {
        if (dist_[static_cast<std::size_t>(w)] == kFar) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      });
    }
  }

  static int last_member(const Set& s) {
    int last = -1;
    for (int x = s.first(); x >= 0; x = s.next(x)) last = x;
    return last;
  }

  static constexpr int kFar = std::numeric_limits<int>::max() / 4;

  const std::vector<Set>& adj_;
  Budget& budget_;

  Mode mode_ = Mode::First;
  int lo_ = 3, hi_ = 3, best_ = 2, limit_ = 0, root_ = 0, min_len_ = 3;
  Set avail_, closers_, on_path_;
  Path path_;
  std::vector<Set> prefix_;
  std::vector<int> dist_;
  std::optional<Path> first_found_, longest_found_;
  std::vector<Path>* collected_ = nullptr;
};

}  // namespace cyclewidth::detail
