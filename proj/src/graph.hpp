#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace cyclewidth {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built;
/// neighbor lists are ascending.
class Graph {
 public:
  Graph() = default;

  /// Duplicate and reversed listings collapse; self-loops and out-of-range
  /// endpoints throw InvalidArgument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  /// All edges (u < v), lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Result of deleting vertices: the induced subgraph, compactly relabeled,
/// plus the map from its ids back to the ids of the graph it came from.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
};

/// G - s with order-preserving compact relabeling.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
/// G[keep] with order-preserving compact relabeling.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Vertex sets of the biconnected blocks (bridges give 2-vertex blocks,
/// isolated vertices give none).
std::vector<VertexSet> biconnected_blocks(const Graph& g);

namespace detail {

template <std::size_t W>
std::vector<Bitset<W>> bit_adjacency(const Graph& g) {
  std::vector<Bitset<W>> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)].set(u);
  }
  return adj;
}

/// Vertices reachable from `start` inside `allowed` (start included).
template <std::size_t W>
Bitset<W> reach(const std::vector<Bitset<W>>& adj, int start, const Bitset<W>& allowed) {
  Bitset<W> seen = Bitset<W>::single(start);
  Bitset<W> frontier = seen;
  while (frontier.any()) {
    Bitset<W> next;
    frontier.for_each([&](int v) { next |= adj[static_cast<std::size_t>(v)]; });
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace detail

}  // namespace cyclewidth
