#include "graph.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace cyclewidth {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  g.m_ = total / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || u >= order()) return false;
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> new_id(static_cast<std::size_t>(g.order()), -1);
  InducedSubgraph out;
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    new_id[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u && new_id[static_cast<std::size_t>(u)] >= 0) {
        edges.emplace_back(new_id[static_cast<std::size_t>(v)], new_id[static_cast<std::size_t>(u)]);
      }
    }
  }
  out.graph = Graph::from_edges(out.to_original.size(), edges);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex u = nb[f.next++];
        const auto ui = static_cast<std::size_t>(u);
        const auto vi = static_cast<std::size_t>(f.v);
        if (disc[ui] < 0) {
          edge_stack.emplace_back(f.v, u);
          disc[ui] = low[ui] = timer++;
          stack.push_back({u, f.v, 0});
        } else if (u != f.parent && disc[ui] < disc[vi]) {
          edge_stack.emplace_back(f.v, u);
          low[vi] = std::min(low[vi], disc[ui]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = stack.back().v;
      const auto pi = static_cast<std::size_t>(p);
      low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done.v)]);
      if (low[static_cast<std::size_t>(done.v)] >= disc[pi]) {
        std::vector<Vertex> block;
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{p, done.v}) break;
        }
        blocks.emplace_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
  return blocks;
}

}  // namespace cyclewidth
