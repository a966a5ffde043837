#include "hitting.hpp"

#include <algorithm>

#include "cycle_search.hpp"
#include "cycles.hpp"
#include "errors.hpp"

namespace cyclewidth {

namespace {

using detail::Bitset;

template <std::size_t W>
class HittingSolver {
 public:
  using Set = Bitset<W>;

  HittingSolver(const std::vector<Set>& adj, int ell, Budget& budget)
      : adj_(adj), ell_(ell), search_(adj, budget), budget_(budget) {}

  /// Minimum hitting set of G[component], lexicographically least.
  std::vector<int> solve(const Set& component) {
    int t = greedy_packing(component);
    std::vector<int> scratch;
    while (!feasible(component, Set{}, t, scratch)) ++t;

    std::vector<int> chosen;
    Set rest = component;
    for (int u = component.first(); u >= 0 && static_cast<int>(chosen.size()) < t; u = component.next(u)) {
      Set trial = rest - Set::single(u);
      scratch.clear();
      if (feasible(trial, Set{}, t - static_cast<int>(chosen.size()) - 1, scratch)) {
        chosen.push_back(u);
        rest = trial;
      }
    }
    return chosen;
  }

 private:
  Set two_core(Set a) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = a.first(); v >= 0; v = a.next(v)) {
        if ((adj_[static_cast<std::size_t>(v)] & a).count() <= 1) {
          a.reset(v);
          changed = true;
        }
      }
    }
    return a;
  }

  int greedy_packing(Set a) {
    int count = 0;
    a = two_core(a);
    while (a.count() >= ell_) {
      auto c = search_.any_in_range(a, ell_, a.count());
      if (!c) break;
      ++count;
      for (int x : *c) a.reset(x);
      a = two_core(a);
    }
    return count;
  }

  // Is there a set of at most t vertices outside `keep` meeting all long cycles of G[a]?
  bool feasible(Set a, Set keep, int t, std::vector<int>& chosen) {
    budget_.charge();
    a = two_core(a);
    if (a.count() < ell_) return true;
    auto c = search_.shortest_in_range(a, ell_, a.count());
    if (!c) return true;
    if (t == 0) return false;
    if (t < greedy_packing(a)) return false;
    std::vector<int> order = *c;
    std::sort(order.begin(), order.end());
    for (int x : order) {
      if (keep.test(x)) continue;
      chosen.push_back(x);
      if (feasible(a - Set::single(x), keep, t - 1, chosen)) return true;
      chosen.pop_back();
      keep.set(x);
    }
    return false;
  }

  const std::vector<Set>& adj_;
  int ell_;
  detail::CycleSearch<W> search_;
  Budget& budget_;
};

}  // namespace

HittingSet min_hitting_set_long_cycles(const Graph& g, int ell, Budget& budget) {
  if (ell < 3) throw InvalidArgument("hitting-set length threshold must be >= 3");
  HittingSet out;
  out.ell = ell;
  const int n = g.order();
  if (n == 0) return out;

  std::vector<Vertex> relevant;
  for (const auto& block : biconnected_blocks(g)) {
    if (static_cast<int>(block.size()) >= ell) relevant.insert(relevant.end(), block.begin(), block.end());
  }
  if (relevant.empty()) return out;

  std::vector<Vertex> chosen;
  detail::dispatch_width(n, [&]<std::size_t W>() {
    using Set = Bitset<W>;
    auto adj = detail::bit_adjacency<W>(g);
    Set rest;
    for (Vertex v : relevant) rest.set(v);
    HittingSolver<W> solver(adj, ell, budget);
    while (rest.any()) {
      Set comp = detail::reach(adj, rest.first(), rest);
      rest -= comp;
      auto part = solver.solve(comp);
      chosen.insert(chosen.end(), part.begin(), part.end());
    }
  });
  out.vertices = VertexSet(std::move(chosen));
  return out;
}

CheckResult verify_hitting_set(const Graph& g, const VertexSet& x, int ell, Budget& budget) {
  for (Vertex v : x) {
    if (v < 0 || v >= g.order()) return CheckResult::fail("vertex " + std::to_string(v) + " out of range");
  }
  auto rest = delete_vertices(g, x);
  if (auto c = find_long_cycle(rest.graph, ell, budget)) {
    std::string where;
    for (Vertex v : c->vertices) where += " " + std::to_string(rest.to_original[static_cast<std::size_t>(v)]);
    return CheckResult::fail("cycle of length " + std::to_string(c->length()) + " survives:" + where);
  }
  return CheckResult::pass();
}

}  // namespace cyclewidth
