#include "generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "cycles.hpp"
#include "errors.hpp"

namespace cyclewidth {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Graph empty_graph(int n) {
  require(n >= 0, "vertex count must be >= 0");
  return Graph::from_edges(static_cast<std::size_t>(n), std::span<const Edge>{});
}

Graph complete_graph(int n) {
  require(n >= 0, "vertex count must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph path_graph(int n) {
  require(n >= 0, "vertex count must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph grid_graph(int a, int b) {
  require(a >= 1 && b >= 1, "grid sides must be >= 1");
  std::vector<Edge> e;
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < b; ++c) {
      if (c + 1 < b) e.emplace_back(r * b + c, r * b + c + 1);
      if (r + 1 < a) e.emplace_back(r * b + c, (r + 1) * b + c);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(a * b), e);
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 0 && b >= 0, "part sizes must be >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph::from_edges(static_cast<std::size_t>(a + b), e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "vertex count must be >= 0");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph random_cubic_graph(int n, std::uint64_t seed) {
  require(n >= 4 && n % 2 == 0, "random cubic graph needs even n >= 4");
  Rng rng(seed);
  std::vector<int> points(static_cast<std::size_t>(3 * n));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i);
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[rng.below(i + 1)]);
    }
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t t = 0; t < points.size() && simple; t += 2) {
      int u = points[t] / 3, v = points[t + 1] / 3;
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      simple = seen.insert({u, v}).second;
    }
    if (simple) {
      std::vector<Edge> e(seen.begin(), seen.end());
      return Graph::from_edges(static_cast<std::size_t>(n), e);
    }
  }
  throw BudgetExceeded("pairing model failed to produce a simple cubic graph");
}

Graph disjoint_cycles(const std::vector<int>& lengths) {
  std::vector<Edge> e;
  int base = 0;
  for (int len : lengths) {
    require(len >= 3, "cycle length must be >= 3");
    for (int i = 0; i < len; ++i) e.emplace_back(base + i, base + (i + 1) % len);
    base += len;
  }
  return Graph::from_edges(static_cast<std::size_t>(base), e);
}

namespace {

int int_arg(const std::vector<std::string>& args, std::size_t i) {
  require(i < args.size(), "family '" + args[0] + "' is missing parameter " + std::to_string(i));
  int v = 0;
  const auto& s = args[i];
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size(), "expected integer parameter, got '" + s + "'");
  return v;
}

void arity(const std::vector<std::string>& args, std::size_t count) {
  require(args.size() == count + 1, "family '" + args[0] + "' takes " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph generate(const std::vector<std::string>& args, std::uint64_t seed) {
  require(!args.empty(), "missing graph family");
  const std::string& f = args[0];
  if (f == "empty") return arity(args, 1), empty_graph(int_arg(args, 1));
  if (f == "complete") return arity(args, 1), complete_graph(int_arg(args, 1));
  if (f == "cycle") return arity(args, 1), cycle_graph(int_arg(args, 1));
  if (f == "path") return arity(args, 1), path_graph(int_arg(args, 1));
  if (f == "grid") return arity(args, 2), grid_graph(int_arg(args, 1), int_arg(args, 2));
  if (f == "complete-bipartite") return arity(args, 2), complete_bipartite_graph(int_arg(args, 1), int_arg(args, 2));
  if (f == "petersen") return arity(args, 0), petersen_graph();
  if (f == "random") {
    arity(args, 2);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(args[2], &used);
      require(used == args[2].size(), "bad probability");
    } catch (const std::logic_error&) {
      throw InvalidArgument("expected edge probability, got '" + args[2] + "'");
    }
    return random_graph(int_arg(args, 1), p, seed);
  }
  if (f == "random-cubic") return arity(args, 1), random_cubic_graph(int_arg(args, 1), seed);
  if (f == "disjoint-cycles") {
    arity(args, 1);
    return disjoint_cycles(CycleFamilySpec::parse(args[1]).lengths());
  }
  throw InvalidArgument("unknown graph family '" + f + "'");
}

}  // namespace cyclewidth
