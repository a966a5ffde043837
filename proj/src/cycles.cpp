#include "cycles.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cycle_search.hpp"
#include "errors.hpp"

namespace cyclewidth {

using detail::Bitset;
using detail::CycleSearch;

Cycle canonical_cycle(std::vector<Vertex> v) {
  if (v.empty()) return {};
  auto min_it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), min_it, v.end());
  if (v.size() > 2 && v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
  return Cycle{std::move(v)};
}

bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices < b.vertices;
}

// CycleFamilySpec ------------------------------------------------------------

CycleFamilySpec::CycleFamilySpec(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw InvalidArgument("cycle family spec needs at least one cycle");
  for (int len : lengths_) {
    if (len < 3) throw InvalidArgument("cycle length " + std::to_string(len) + " < 3 in spec");
  }
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

CycleFamilySpec CycleFamilySpec::parse(std::string_view text) {
  std::vector<int> lengths;
  while (true) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("malformed cycle spec entry '" + std::string(tok) + "'");
    }
    lengths.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return CycleFamilySpec(std::move(lengths));
}

int CycleFamilySpec::h() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

CycleFamilySpec CycleFamilySpec::without_longest() const {
  if (k() < 2) throw InvalidArgument("cannot remove the only cycle of a spec");
  return CycleFamilySpec(std::vector<int>(lengths_.begin() + 1, lengths_.end()));
}

std::string CycleFamilySpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out;
}

// single-cycle searches ------------------------------------------------------

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, root);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      const int dv = dist[static_cast<std::size_t>(v)];
      if (2 * dv + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        const auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dv + 1;
          parent[wi] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          best = std::min(best, dv + dist[wi] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

enum class BlockQuery { ShortestInRange, AnyInRange, Longest };

// Runs a single-cycle query on one biconnected block and lifts the answer.
std::optional<Cycle> query_block(const Graph& g, const VertexSet& block, BlockQuery q, int lo, int hi,
                                 Budget& budget) {
  auto sub = induced_subgraph(g, block);
  const int n = sub.graph.order();
  auto local = detail::dispatch_width(n, [&]<std::size_t W>() -> std::optional<std::vector<int>> {
    auto adj = detail::bit_adjacency<W>(sub.graph);
    CycleSearch<W> search(adj, budget);
    const auto all = Bitset<W>::prefix(n);
    switch (q) {
      case BlockQuery::ShortestInRange:
        return search.shortest_in_range(all, lo, hi);
      case BlockQuery::AnyInRange:
        return search.any_in_range(all, lo, hi);
      case BlockQuery::Longest:
        return search.longest(all, lo - 1);
    }
    return std::nullopt;
  });
  if (!local) return std::nullopt;
  std::vector<Vertex> lifted;
  lifted.reserve(local->size());
  for (int v : *local) lifted.push_back(sub.to_original[static_cast<std::size_t>(v)]);
  return canonical_cycle(std::move(lifted));
}

void check_range(int lo, int hi) {
  if (lo < 3 || hi < lo) {
    throw InvalidArgument("cycle length window [" + std::to_string(lo) + "," + std::to_string(hi) +
                          "] must satisfy 3 <= lo <= hi");
  }
}

}  // namespace

std::optional<Cycle> find_cycle_in_range(const Graph& g, int lo, int hi, Budget& budget) {
  check_range(lo, hi);
  std::optional<Cycle> best;
  for (const auto& block : biconnected_blocks(g)) {
    if (static_cast<int>(block.size()) < lo) continue;
    const int cap = best ? std::min(hi, best->length()) : hi;
    auto c = query_block(g, block, BlockQuery::ShortestInRange, lo, cap, budget);
    if (c && (!best || cycle_less(*c, *best))) best = std::move(c);
  }
  return best;
}

std::optional<Cycle> find_long_cycle(const Graph& g, int min_len, Budget& budget) {
  check_range(min_len, min_len);
  for (const auto& block : biconnected_blocks(g)) {
    const int size = static_cast<int>(block.size());
    if (size < min_len) continue;
    if (auto c = query_block(g, block, BlockQuery::AnyInRange, min_len, size, budget)) return c;
  }
  return std::nullopt;
}

std::optional<Cycle> longest_cycle(const Graph& g, Budget& budget) {
  auto blocks = biconnected_blocks(g);
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  std::optional<Cycle> best;
  for (const auto& block : blocks) {
    const int size = static_cast<int>(block.size());
    const int floor = best ? best->length() : 2;
    if (size < 3 || size <= floor) continue;
    if (auto c = query_block(g, block, BlockQuery::Longest, floor + 1, size, budget)) best = std::move(c);
  }
  return best;
}

// disjoint-cycle engine ------------------------------------------------------

namespace {

/// Decides whether G[allowed] has disjoint cycles c_1..c_t with |c_i| >= req_i
/// (requirements sorted descending). Branches on a minimum-degree vertex v:
/// either v is unused, or v lies on a cycle whose vertex set is minimal for
/// some requirement. Failed states are memoized.
template <std::size_t W>
class DisjointCycleEngine {
 public:
  using Set = Bitset<W>;
  using Path = std::vector<int>;
  struct Placed {
    Path cycle;
    int requirement;
  };

  DisjointCycleEngine(const std::vector<Set>& adj, Budget& budget)
      : adj_(adj), search_(adj, budget), budget_(budget) {}

  std::optional<std::vector<Placed>> solve(const Set& allowed, std::vector<int> requirements) {
    if (requirements.size() > 64) throw InvalidArgument("at most 64 cycles per spec are supported");
    reqs_ = std::move(requirements);
    failed_.clear();
    std::vector<Placed> out;
    const std::uint64_t all = reqs_.size() == 64 ? ~0ULL : (1ULL << reqs_.size()) - 1;
    if (!rec(allowed, all, out)) return std::nullopt;
    return out;
  }

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

  CycleSearch<W>& search() { return search_; }

 private:
  struct Key {
    Set a;
    std::uint64_t rem;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.a.hash() ^ (k.rem * 0x9e3779b97f4a7c15ULL); }
  };

  bool rec(Set a, std::uint64_t rem, std::vector<Placed>& out) {
    if (rem == 0) return true;
    budget_.charge();
    a = two_core(a);
    const int size = a.count();
    int need = 0;
    for (std::uint64_t r = rem; r; r &= r - 1) need += reqs_[static_cast<std::size_t>(std::countr_zero(r))];
    if (need > size) return false;
    const Key key{a, rem};
    if (failed_.contains(key)) return false;

    const int largest = reqs_[static_cast<std::size_t>(std::countr_zero(rem))];
    if (!search_.any_in_range(a, largest, size)) {
      failed_.insert(key);
      return false;
    }

    int v = -1, best_deg = 1 << 30;
    for (int x = a.first(); x >= 0; x = a.next(x)) {
      const int d = (adj_[static_cast<std::size_t>(x)] & a).count();
      if (d < best_deg) {
        best_deg = d;
        v = x;
      }
    }

    int previous = -1;
    for (std::uint64_t r = rem; r; r &= r - 1) {
      const int idx = std::countr_zero(r);
      const int len = reqs_[static_cast<std::size_t>(idx)];
      if (len == previous) continue;  // equal requirements: lowest index stands for the group
      previous = len;
      for (auto& c : search_.minimal_through(a, v, len)) {
        Set cs;
        for (int x : c) cs.set(x);
        if (rec(a - cs, rem & ~(1ULL << idx), out)) {
          out.push_back({std::move(c), idx});
          return true;
        }
      }
    }
    if (rec(a - Set::single(v), rem, out)) return true;
    failed_.insert(key);
    return false;
  }

  const std::vector<Set>& adj_;
  CycleSearch<W> search_;
  Budget& budget_;
  std::vector<int> reqs_;
  std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

CyclePacking max_long_cycle_packing(const Graph& g, int ell, std::optional<int> stop_at, Budget& budget) {
  if (ell < 3) throw InvalidArgument("packing length threshold must be >= 3");
  const int n = g.order();
  CyclePacking best;
  if (n == 0) return best;
  detail::dispatch_width(n, [&]<std::size_t W>() {
    using Set = Bitset<W>;
    auto adj = detail::bit_adjacency<W>(g);
    DisjointCycleEngine<W> engine(adj, budget);
    const Set core = engine.two_core(Set::prefix(n));

    int upper = 0;
    for (Set rest = core; rest.any();) {
      Set comp = detail::reach(adj, rest.first(), rest);
      upper += comp.count() / ell;
      rest -= comp;
    }

    auto lift = [](const std::vector<std::vector<int>>& paths) {
      CyclePacking p;
      for (const auto& c : paths) p.cycles.push_back(canonical_cycle(c));
      std::sort(p.cycles.begin(), p.cycles.end(),
                [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
      return p;
    };

    // greedy lower bound from repeated shortest long cycles
    std::vector<std::vector<int>> greedy;
    for (Set rest = core; rest.count() >= ell;) {
      auto c = engine.search().shortest_in_range(rest, ell, rest.count());
      if (!c) break;
      for (int x : *c) rest.reset(x);
      greedy.push_back(std::move(*c));
      rest = engine.two_core(rest);
    }
    best = lift(greedy);

    for (int t = best.size() + 1; t <= upper; ++t) {
      if (stop_at && best.size() >= *stop_at) break;
      auto placed = engine.solve(core, std::vector<int>(static_cast<std::size_t>(t), ell));
      if (!placed) break;
      std::vector<std::vector<int>> paths;
      for (auto& p : *placed) paths.push_back(std::move(p.cycle));
      best = lift(paths);
    }
  });
  return best;
}

std::optional<MinorModel> has_disjoint_cycles_minor(const Graph& g, const CycleFamilySpec& spec, Budget& budget) {
  const int n = g.order();
  if (spec.h() > n) return std::nullopt;
  return detail::dispatch_width(n, [&]<std::size_t W>() -> std::optional<MinorModel> {
    auto adj = detail::bit_adjacency<W>(g);
    DisjointCycleEngine<W> engine(adj, budget);
    auto placed = engine.solve(Bitset<W>::prefix(n), spec.lengths());
    if (!placed) return std::nullopt;
    std::sort(placed->begin(), placed->end(),
              [](const auto& a, const auto& b) { return a.requirement < b.requirement; });
    MinorModel m;
    for (auto& p : *placed) {
      m.cycles.push_back(canonical_cycle(std::move(p.cycle)));
      m.assignment.push_back(p.requirement);
    }
    return m;
  });
}

// certificate checks ---------------------------------------------------------

CheckResult verify_cycle(const Graph& g, const Cycle& c) {
  const auto& v = c.vertices;
  if (v.size() < 3) return CheckResult::fail("cycle has fewer than 3 vertices");
  for (Vertex x : v) {
    if (x < 0 || x >= g.order()) return CheckResult::fail("cycle vertex " + std::to_string(x) + " out of range");
  }
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return CheckResult::fail("cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vertex a = v[i], b = v[(i + 1) % v.size()];
    if (!g.adjacent(a, b)) {
      return CheckResult::fail("cycle uses non-edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  return CheckResult::pass();
}

namespace {

CheckResult check_disjoint(const Graph& g, const std::vector<Cycle>& cycles) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (auto r = verify_cycle(g, cycles[i]); !r) return CheckResult::fail("cycle " + std::to_string(i) + ": " + r.reason);
    for (Vertex x : cycles[i].vertices) {
      if (used[static_cast<std::size_t>(x)]) {
        return CheckResult::fail("disjointness: vertex " + std::to_string(x) + " is on two cycles");
      }
      used[static_cast<std::size_t>(x)] = 1;
    }
  }
  return CheckResult::pass();
}

}  // namespace

CheckResult verify_packing(const Graph& g, const CyclePacking& p, int ell) {
  if (auto r = check_disjoint(g, p.cycles); !r) return r;
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    if (p.cycles[i].length() < ell) {
      return CheckResult::fail("length: cycle " + std::to_string(i) + " has length " +
                               std::to_string(p.cycles[i].length()) + " < " + std::to_string(ell));
    }
  }
  return CheckResult::pass();
}

CheckResult verify_minor_model(const Graph& g, const CycleFamilySpec& spec, const MinorModel& m) {
  if (m.cycles.size() != spec.lengths().size() || m.assignment.size() != m.cycles.size()) {
    return CheckResult::fail("model has " + std::to_string(m.cycles.size()) + " cycles for a spec of " +
                             std::to_string(spec.k()));
  }
  if (auto r = check_disjoint(g, m.cycles); !r) return r;
  std::vector<char> hit(m.cycles.size(), 0);
  for (std::size_t i = 0; i < m.cycles.size(); ++i) {
    const int j = m.assignment[i];
    if (j < 0 || j >= spec.k() || hit[static_cast<std::size_t>(j)]) {
      return CheckResult::fail("assignment is not a bijection onto the spec");
    }
    hit[static_cast<std::size_t>(j)] = 1;
    if (m.cycles[i].length() < spec.lengths()[static_cast<std::size_t>(j)]) {
      return CheckResult::fail("dominance: cycle of length " + std::to_string(m.cycles[i].length()) +
                               " assigned to spec length " + std::to_string(spec.lengths()[static_cast<std::size_t>(j)]));
    }
  }
  return CheckResult::pass();
}

std::string format_cycles(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c.vertices[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<Cycle> parse_cycles(std::string_view text) {
  std::vector<Cycle> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Cycle c;
    std::string tok;
    while (ls >> tok) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("bad vertex id '" + tok + "' in cycle list");
      c.vertices.push_back(v);
    }
    if (!c.vertices.empty()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cyclewidth
