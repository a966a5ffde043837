#include "treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "cycles.hpp"
#include "errors.hpp"

namespace cyclewidth {

namespace {

using detail::Bitset;

template <std::size_t W>
using AdjBits = std::vector<Bitset<W>>;

template <std::size_t W>
int minor_min_width_bits(AdjBits<W> adj, Bitset<W> alive) {
  int lb = 0;
  while (alive.count() > 1) {
    int v = -1, best = 1 << 30;
    alive.for_each([&](int x) {
      const int d = (adj[static_cast<std::size_t>(x)] & alive).count();
      if (d < best) {
        best = d;
        v = x;
      }
    });
    lb = std::max(lb, best);
    const auto nb = adj[static_cast<std::size_t>(v)] & alive;
    if (nb.none()) {
      alive.reset(v);
      continue;
    }
    int u = -1, ubest = 1 << 30;
    nb.for_each([&](int x) {
      const int d = (adj[static_cast<std::size_t>(x)] & alive).count();
      if (d < ubest) {
        ubest = d;
        u = x;
      }
    });
    // contract v into u
    auto merged = (adj[static_cast<std::size_t>(u)] | nb) - Bitset<W>::single(u) - Bitset<W>::single(v);
    adj[static_cast<std::size_t>(u)] = merged;
    merged.for_each([&](int x) {
      adj[static_cast<std::size_t>(x)].set(u);
      adj[static_cast<std::size_t>(x)].reset(v);
    });
    alive.reset(v);
  }
  return lb;
}

template <std::size_t W>
std::vector<int> min_fill_bits(AdjBits<W> adj, Bitset<W> alive) {
  std::vector<int> order;
  while (alive.any()) {
    int v = -1;
    long best_fill = -1;
    int best_deg = 0;
    alive.for_each([&](int x) {
      const auto nb = adj[static_cast<std::size_t>(x)] & alive;
      long missing = 0;
      nb.for_each([&](int y) { missing += (nb - adj[static_cast<std::size_t>(y)] - Bitset<W>::single(y)).count(); });
      missing /= 2;
      const int deg = nb.count();
      if (v < 0 || missing < best_fill || (missing == best_fill && deg < best_deg)) {
        v = x;
        best_fill = missing;
        best_deg = deg;
      }
    });
    const auto nb = adj[static_cast<std::size_t>(v)] & alive;
    nb.for_each([&](int y) { adj[static_cast<std::size_t>(y)] |= nb - Bitset<W>::single(y); });
    alive.reset(v);
    order.push_back(v);
  }
  return order;
}

// Layered dynamic program over eliminated prefixes. An entry for set S holds
// the best width over orderings that eliminate S first; only entries strictly
// below the incumbent are kept.
class SubsetDp {
 public:
  SubsetDp(const std::vector<std::uint64_t>& adj, Budget& budget) : adj_(adj), budget_(budget) {}

  // Returns an ordering strictly better than `upper`, or empty if none exists.
  std::vector<int> improve(int upper) {
    const int n = static_cast<int>(adj_.size());
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    layers_.assign(1, {Entry{0, -1, -1}});
    int best = upper;
    int best_layer = -1;
    std::uint64_t best_set = 0;
    for (int i = 0; i <= n; ++i) {
      auto& layer = layers_[static_cast<std::size_t>(i)];
      std::vector<Entry> next;
      for (const auto& e : layer) {
        if (e.value >= best) continue;
        budget_.charge();
        const int finish = std::max<int>(e.value, n - i - 1);
        if (finish < best) {
          best = finish;
          best_layer = i;
          best_set = e.set;
        }
        if (i == n) continue;
        for (std::uint64_t rest = full & ~e.set; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int q = degree_after(e.set, v);
          const int value = std::max<int>(e.value, q);
          if (value < best) next.push_back({e.set | (1ULL << v), static_cast<std::int16_t>(value), static_cast<std::int16_t>(v)});
        }
      }
      if (i == n) break;
      std::sort(next.begin(), next.end(), [](const Entry& a, const Entry& b) {
        if (a.set != b.set) return a.set < b.set;
        if (a.value != b.value) return a.value < b.value;
        return a.last < b.last;
      });
      next.erase(std::unique(next.begin(), next.end(), [](const Entry& a, const Entry& b) { return a.set == b.set; }),
                 next.end());
      layers_.push_back(std::move(next));
      if (layers_.back().empty()) break;
    }
    if (best_layer < 0) return {};

    std::vector<int> order;
    std::uint64_t set = best_set;
    for (int i = best_layer; i > 0; --i) {
      const auto& layer = layers_[static_cast<std::size_t>(i)];
      auto it = std::lower_bound(layer.begin(), layer.end(), set,
                                 [](const Entry& e, std::uint64_t s) { return e.set < s; });
      order.push_back(it->last);
      set &= ~(1ULL << it->last);
    }
    std::reverse(order.begin(), order.end());
    for (std::uint64_t rest = full & ~best_set; rest; rest &= rest - 1) order.push_back(std::countr_zero(rest));
    return order;
  }

 private:
  struct Entry {
    std::uint64_t set;
    std::int16_t value;
    std::int16_t last;
  };

  // Degree of v in the elimination graph once `eliminated` is gone.
  int degree_after(std::uint64_t eliminated, int v) const {
    std::uint64_t comp = 1ULL << v;
    std::uint64_t frontier = comp;
    std::uint64_t boundary = 0;
    while (frontier) {
      std::uint64_t nb = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) nb |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      boundary |= nb & ~eliminated;
      frontier = nb & eliminated & ~comp;
      comp |= frontier;
    }
    boundary &= ~(1ULL << v);
    return std::popcount(boundary);
  }

  const std::vector<std::uint64_t>& adj_;
  Budget& budget_;
  std::vector<std::vector<Entry>> layers_;
};

// Depth-first branch and bound over elimination orderings with memoized
// eliminated sets, simplicial reductions and minor-min-width bounds.
template <std::size_t W>
class OrderingSearch {
 public:
  using Set = Bitset<W>;

  OrderingSearch(Budget& budget) : budget_(budget) {}

  std::vector<int> improve(const AdjBits<W>& adj, int n, int upper) {
    best_ = upper;
    best_order_.clear();
    seen_.clear();
    order_.clear();
    dfs(adj, Set::prefix(n), Set{}, 0);
    return best_order_;
  }

 private:
  void dfs(const AdjBits<W>& adj, const Set& alive, const Set& gone, int width) {
    budget_.charge();
    const int left = alive.count();
    if (std::max(width, left - 1) < best_) {
      best_ = std::max(width, left - 1);
      best_order_ = order_;
      alive.for_each([&](int v) { best_order_.push_back(v); });
    }
    if (left <= 1 || std::max(width, left - 1) <= width) return;
    const int lb = std::max(width, minor_min_width_bits<W>(adj, alive));
    if (lb >= best_) return;
    if (auto it = seen_.find(gone); it != seen_.end() && it->second <= width) return;
    seen_[gone] = width;

    auto is_clique = [&](const Set& s) {
      bool ok = true;
      s.for_each([&](int z) {
        if (ok && !(s - Set::single(z)).subset_of(adj[static_cast<std::size_t>(z)])) ok = false;
      });
      return ok;
    };
    // Simplicial vertices, and almost simplicial ones of degree <= lb, can be
    // eliminated first without loss.
    int forced = -1;
    std::vector<std::pair<int, int>> cands;  // (degree, vertex)
    alive.for_each([&](int v) {
      if (forced >= 0) return;
      const auto nb = adj[static_cast<std::size_t>(v)] & alive;
      const int deg = nb.count();
      bool reducible = is_clique(nb);
      if (!reducible && deg <= lb) {
        nb.for_each([&](int y) {
          if (!reducible && is_clique(nb - Set::single(y))) reducible = true;
        });
      }
      if (reducible) {
        forced = v;
        return;
      }
      cands.emplace_back(deg, v);
    });
    if (forced >= 0) {
      cands.assign(1, {(adj[static_cast<std::size_t>(forced)] & alive).count(), forced});
    } else {
      std::sort(cands.begin(), cands.end());
    }
    for (auto [deg, v] : cands) {
      const int w = std::max(width, deg);
      if (w >= best_) continue;
      AdjBits<W> next = adj;
      const auto nb = adj[static_cast<std::size_t>(v)] & alive;
      nb.for_each([&](int y) { next[static_cast<std::size_t>(y)] |= nb - Set::single(y); });
      Set next_alive = alive;
      next_alive.reset(v);
      Set next_gone = gone;
      next_gone.set(v);
      order_.push_back(v);
      dfs(next, next_alive, next_gone, w);
      order_.pop_back();
    }
  }

  Budget& budget_;
  int best_ = 0;
  std::vector<int> order_, best_order_;
  std::unordered_map<Set, int, detail::BitsetHash<Set>> seen_;
};

struct ComponentResult {
  std::vector<Vertex> order;  // original ids
  bool exact = true;
};

ComponentResult solve_component(const Graph& g, const VertexSet& comp, Budget& budget, const TreewidthOptions& options) {
  auto sub = induced_subgraph(g, comp);
  const int n = sub.graph.order();
  ComponentResult result;
  std::vector<int> local = detail::dispatch_width(n, [&]<std::size_t W>() {
    auto adj = detail::bit_adjacency<W>(sub.graph);
    const auto all = Bitset<W>::prefix(n);
    std::vector<int> order = min_fill_bits<W>(adj, all);
    const int upper = ordering_width(sub.graph, std::vector<Vertex>(order.begin(), order.end()));
    const int lower = minor_min_width_bits<W>(adj, all);
    if (lower >= upper) return order;
    try {
      std::vector<int> better;
      if (n <= options.dp_cutoff && n <= 64) {
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) {
          for (Vertex u : sub.graph.neighbors(v)) masks[static_cast<std::size_t>(v)] |= 1ULL << u;
        }
        better = SubsetDp(masks, budget).improve(upper);
      } else {
        better = OrderingSearch<W>(budget).improve(adj, n, upper);
      }
      if (!better.empty()) order = std::move(better);
    } catch (const BudgetExceeded&) {
      result.exact = false;
    }
    return order;
  });
  for (int v : local) result.order.push_back(sub.to_original[static_cast<std::size_t>(v)]);
  return result;
}

}  // namespace

std::vector<Vertex> min_fill_ordering(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  return detail::dispatch_width(n, [&]<std::size_t W>() {
    auto order = min_fill_bits<W>(detail::bit_adjacency<W>(g), Bitset<W>::prefix(n));
    return std::vector<Vertex>(order.begin(), order.end());
  });
}

int minor_min_width(const Graph& g) {
  const int n = g.order();
  if (n == 0) return -1;
  return detail::dispatch_width(
      n, [&]<std::size_t W>() { return minor_min_width_bits<W>(detail::bit_adjacency<W>(g), Bitset<W>::prefix(n)); });
}

int ordering_width(const Graph& g, const std::vector<Vertex>& order) {
  return decomposition_from_ordering(g, order).width();
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("elimination ordering must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) {
      throw InvalidArgument("elimination ordering must be a permutation");
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  TreeDecomposition td;
  if (n == 0) return td;
  // filled graph, higher neighbors only
  std::vector<std::vector<Vertex>> higher(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) higher[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  std::vector<int> roots;
  td.bags.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    auto& hv = higher[static_cast<std::size_t>(v)];
    std::sort(hv.begin(), hv.end(), [&](Vertex a, Vertex b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
    hv.erase(std::unique(hv.begin(), hv.end()), hv.end());
    auto& bag = td.bags[i];
    bag.push_back(v);
    bag.insert(bag.end(), hv.begin(), hv.end());
    if (hv.empty()) {
      roots.push_back(static_cast<int>(i));
      continue;
    }
    const Vertex parent = hv.front();
    td.edges.emplace_back(static_cast<int>(i), pos[static_cast<std::size_t>(parent)]);
    auto& hp = higher[static_cast<std::size_t>(parent)];
    hp.insert(hp.end(), hv.begin() + 1, hv.end());
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.edges.emplace_back(roots[0], roots[r]);
  td.normalize();
  return td;
}

TreewidthResult exact_treewidth(const Graph& g, Budget& budget, const TreewidthOptions& options) {
  TreewidthResult result;
  std::vector<Vertex> order;
  for (const auto& comp : connected_components(g)) {
    auto part = solve_component(g, comp, budget, options);
    result.exact = result.exact && part.exact;
    order.insert(order.end(), part.order.begin(), part.order.end());
  }
  result.td = decomposition_from_ordering(g, order);
  result.width = result.td.width();
  return result;
}

TreeDecomposition birmele_decomposition(const Graph& g, int ell, Budget& budget) {
  if (ell < 3) throw InvalidArgument("ell must be >= 3");
  if (auto c = find_long_cycle(g, ell, budget)) {
    throw PreconditionViolated("graph has a cycle of length " + std::to_string(c->length()) + " >= " + std::to_string(ell),
                               c->vertices);
  }
  auto r = exact_treewidth(g, budget);
  if (r.width > ell - 2) {
    if (!r.exact) {
      throw BudgetExceeded("treewidth search ran out of budget above width " + std::to_string(ell - 2));
    }
    throw TheoremViolation("graph with circumference < " + std::to_string(ell) + " has treewidth " +
                           std::to_string(r.width) + " > " + std::to_string(ell - 2));
  }
  return std::move(r.td);
}

}  // namespace cyclewidth
