#include "tree_decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace cyclewidth {

int TreeDecomposition::width() const { return static_cast<int>(max_bag_size()) - 1; }

std::size_t TreeDecomposition::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return best;
}

void TreeDecomposition::normalize() {
  for (auto& b : bags) std::sort(b.begin(), b.end());
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

CheckResult validate_td(const Graph& g, const TreeDecomposition& td) {
  const int nodes = static_cast<int>(td.bags.size());
  const int n = g.order();
  if (nodes == 0) {
    return n == 0 ? CheckResult::pass() : CheckResult::fail("decomposition has no bags");
  }
  if (static_cast<int>(td.edges.size()) != nodes - 1) {
    return CheckResult::fail("tree has " + std::to_string(td.edges.size()) + " edges for " +
                             std::to_string(nodes) + " nodes");
  }
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return CheckResult::fail("tree edge references unknown node");
    int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra == rb) return CheckResult::fail("tree edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }

  // node lists per vertex
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int i = 0; i < nodes; ++i) {
    auto bag = td.bags[static_cast<std::size_t>(i)];
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      return CheckResult::fail("bag " + std::to_string(i) + " lists a vertex twice");
    }
    for (Vertex v : bag) {
      if (v < 0 || v >= n) return CheckResult::fail("bag " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v));
      holders[static_cast<std::size_t>(v)].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[static_cast<std::size_t>(v)].empty()) {
      return CheckResult::fail("coverage: vertex " + std::to_string(v) + " is in no bag");
    }
  }

  std::vector<std::vector<Vertex>> sorted_bags = td.bags;
  for (auto& b : sorted_bags) std::sort(b.begin(), b.end());
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int node : holders[static_cast<std::size_t>(u)]) {
      const auto& b = sorted_bags[static_cast<std::size_t>(node)];
      if (std::binary_search(b.begin(), b.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return CheckResult::fail("edge coverage: edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " is in no bag");
    }
  }

  // coherence: nodes holding v must be connected by tree edges among themselves
  std::vector<char> holds(static_cast<std::size_t>(nodes), 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto& hs = holders[static_cast<std::size_t>(v)];
    for (int node : hs) holds[static_cast<std::size_t>(node)] = 1;
    std::vector<int> p(static_cast<std::size_t>(nodes));
    std::iota(p.begin(), p.end(), 0);
    std::size_t unions = 0;
    for (auto [a, b] : td.edges) {
      if (holds[static_cast<std::size_t>(a)] && holds[static_cast<std::size_t>(b)]) {
        int ra = find_root(p, a), rb = find_root(p, b);
        if (ra != rb) {
          p[static_cast<std::size_t>(ra)] = rb;
          ++unions;
        }
      }
    }
    for (int node : hs) holds[static_cast<std::size_t>(node)] = 0;
    if (unions + 1 != hs.size()) {
      return CheckResult::fail("coherence: bags containing vertex " + std::to_string(v) +
                               " do not form a subtree");
    }
  }
  return CheckResult::pass();
}

TreeDecomposition td_add_to_all_bags(const TreeDecomposition& td, const VertexSet& s,
                                     const std::vector<Vertex>& to_original) {
  for (Vertex v : to_original) {
    if (s.contains(v)) {
      throw InvalidArgument("id collision: vertex " + std::to_string(v) +
                            " is both added and present in the decomposition");
    }
  }
  TreeDecomposition out;
  out.edges = td.edges;
  out.bags.reserve(std::max<std::size_t>(td.bags.size(), 1));
  for (const auto& bag : td.bags) {
    std::vector<Vertex> lifted;
    lifted.reserve(bag.size() + s.size());
    for (Vertex v : bag) {
      if (v < 0 || static_cast<std::size_t>(v) >= to_original.size()) {
        throw InvalidArgument("bag vertex " + std::to_string(v) + " has no original id");
      }
      lifted.push_back(to_original[static_cast<std::size_t>(v)]);
    }
    lifted.insert(lifted.end(), s.begin(), s.end());
    out.bags.push_back(std::move(lifted));
  }
  if (out.bags.empty()) out.bags.push_back(s.members());
  out.normalize();
  return out;
}

}  // namespace cyclewidth
