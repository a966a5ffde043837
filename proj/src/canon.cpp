#include "canon.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "errors.hpp"

namespace cyclewidth {

namespace {

using Mask = std::uint16_t;

int pair_bit(int n, int i, int j) {
  const int total = n * (n - 1) / 2;
  return total - 1 - (j * (j - 1) / 2 + i);
}

void check_order(int n) {
  if (n < 0 || n > kMaxCanonOrder) {
    throw InvalidArgument("canonical codes support at most " + std::to_string(kMaxCanonOrder) + " vertices");
  }
}

/// Ordered partition refinement with individualization; leaves are scored
/// by adjacency code under the induced labeling.
class Canonizer {
 public:
  Canonizer(int n, const std::array<Mask, 16>& adj) : n_(n), adj_(adj) {}

  std::uint64_t run() {
    State s;
    for (int i = 0; i < n_; ++i) s.lab[static_cast<std::size_t>(i)] = i;
    s.cells = n_ > 0 ? 1 : 0;
    s.start[0] = 0;
    s.start[1] = n_;
    search(s);
    return best_;
  }

 private:
  struct State {
    std::array<int, 16> lab{};
    std::array<int, 17> start{};
    int cells = 0;
  };

  std::uint64_t signature(const State& s, int v) const {
    std::uint64_t sig = 0;
    const Mask nb = adj_[static_cast<std::size_t>(v)];
    for (int c = 0; c < s.cells; ++c) {
      int count = 0;
      for (int p = s.start[static_cast<std::size_t>(c)]; p < s.start[static_cast<std::size_t>(c) + 1]; ++p) {
        count += (nb >> s.lab[static_cast<std::size_t>(p)]) & 1;
      }
      sig |= static_cast<std::uint64_t>(count) << (4 * (15 - c));
    }
    return sig;
  }

  void refine(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < s.cells; ++c) {
        const int b = s.start[static_cast<std::size_t>(c)];
        const int e = s.start[static_cast<std::size_t>(c) + 1];
        if (e - b < 2) continue;
        std::array<std::pair<std::uint64_t, int>, 16> keyed{};
        for (int p = b; p < e; ++p) {
          keyed[static_cast<std::size_t>(p - b)] = {signature(s, s.lab[static_cast<std::size_t>(p)]), s.lab[static_cast<std::size_t>(p)]};
        }
        std::sort(keyed.begin(), keyed.begin() + (e - b));
        if (keyed[0].first == keyed[static_cast<std::size_t>(e - b - 1)].first) continue;
        std::array<int, 17> starts{};
        int pieces = 0;
        for (int p = b; p < e; ++p) {
          const auto& kv = keyed[static_cast<std::size_t>(p - b)];
          if (p == b || kv.first != keyed[static_cast<std::size_t>(p - b - 1)].first) starts[static_cast<std::size_t>(pieces++)] = p;
          s.lab[static_cast<std::size_t>(p)] = kv.second;
        }
        for (int t = s.cells; t > c; --t) s.start[static_cast<std::size_t>(t + pieces - 1)] = s.start[static_cast<std::size_t>(t)];
        for (int t = 0; t < pieces; ++t) s.start[static_cast<std::size_t>(c + t)] = starts[static_cast<std::size_t>(t)];
        s.cells += pieces - 1;
        changed = true;
        break;
      }
    }
  }

  bool twins(int u, int v) const {
    const Mask mu = adj_[static_cast<std::size_t>(u)] & static_cast<Mask>(~(1u << v));
    const Mask mv = adj_[static_cast<std::size_t>(v)] & static_cast<Mask>(~(1u << u));
    return mu == mv;
  }

  void search(State s) {
    refine(s);
    if (s.cells == n_) {
      std::uint64_t code = 0;
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
          if ((adj_[static_cast<std::size_t>(s.lab[static_cast<std::size_t>(i)])] >> s.lab[static_cast<std::size_t>(j)]) & 1) {
            code |= std::uint64_t{1} << pair_bit(n_, i, j);
          }
        }
      }
      best_ = std::max(best_, code);
      return;
    }
    int c = 0;
    while (s.start[static_cast<std::size_t>(c) + 1] - s.start[static_cast<std::size_t>(c)] < 2) ++c;
    const int b = s.start[static_cast<std::size_t>(c)];
    const int e = s.start[static_cast<std::size_t>(c) + 1];
    bool all_twins = true;
    for (int p = b + 1; p < e && all_twins; ++p) {
      all_twins = twins(s.lab[static_cast<std::size_t>(b)], s.lab[static_cast<std::size_t>(p)]);
    }
    const int tries = all_twins ? 1 : e - b;
    for (int t = 0; t < tries; ++t) {
      State child = s;
      std::swap(child.lab[static_cast<std::size_t>(b)], child.lab[static_cast<std::size_t>(b + t)]);
      for (int q = child.cells; q > c; --q) child.start[static_cast<std::size_t>(q + 1)] = child.start[static_cast<std::size_t>(q)];
      child.start[static_cast<std::size_t>(c) + 1] = b + 1;
      ++child.cells;
      search(child);
    }
  }

  int n_;
  std::array<Mask, 16> adj_;
  std::uint64_t best_ = 0;
};

std::uint64_t canonical_from_masks(int n, const std::array<Mask, 16>& adj) { return Canonizer(n, adj).run(); }

std::array<Mask, 16> masks_from_code(int n, std::uint64_t code) {
  std::array<Mask, 16> adj{};
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> pair_bit(n, i, j)) & 1) {
        adj[static_cast<std::size_t>(i)] |= static_cast<Mask>(1u << j);
        adj[static_cast<std::size_t>(j)] |= static_cast<Mask>(1u << i);
      }
    }
  }
  return adj;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  check_order(g.order());
  std::uint64_t code = 0;
  for (auto [u, v] : g.edges()) code |= std::uint64_t{1} << pair_bit(g.order(), u, v);
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  check_order(n);
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> pair_bit(n, i, j)) & 1) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

std::uint64_t canonical_code(const Graph& g) {
  check_order(g.order());
  return canonical_from_masks(g.order(), masks_from_code(g.order(), adjacency_code(g)));
}

std::vector<std::uint64_t> enumerate_graph_codes(int n, bool connected_only) {
  check_order(n);
  if (n == 0) return connected_only ? std::vector<std::uint64_t>{} : std::vector<std::uint64_t>{0};
  std::vector<std::uint64_t> level{0};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    const int lo = connected_only ? 1 : 0;
    for (std::uint64_t code : level) {
      auto adj = masks_from_code(m - 1, code);
      for (int sub = lo; sub < (1 << (m - 1)); ++sub) {
        auto ext = adj;
        ext[static_cast<std::size_t>(m - 1)] = static_cast<Mask>(sub);
        for (int i = 0; i < m - 1; ++i) {
          if ((sub >> i) & 1) ext[static_cast<std::size_t>(i)] |= static_cast<Mask>(1u << (m - 1));
        }
        next.insert(canonical_from_masks(m, ext));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace cyclewidth
