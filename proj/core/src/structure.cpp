#include "triameter/structure.hpp"

#include <algorithm>
#include <limits>

#include "triameter/error.hpp"

namespace triameter {

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue[0] = s;
    std::size_t tail = 1;
    for (std::size_t head = 0; head < tail; ++head) {
      Vertex u = queue[head];
      // Cycles through s found later are no shorter than this bound.
      if (2 * dist[u] >= best) break;
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<VertexSet> blocks(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  if (n == 1) return {VertexSet::full(1)};

  // Iterative Hopcroft-Tarjan over an edge stack.
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::size_t> next_edge(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> call_stack;
  std::vector<VertexSet> out;
  int timer = 0;

  disc[0] = low[0] = timer++;
  call_stack.push_back(0);
  while (!call_stack.empty()) {
    Vertex u = call_stack.back();
    auto nbrs = g.neighbors(u);
    if (next_edge[u] < nbrs.size()) {
      Vertex v = nbrs[next_edge[u]++];
      if (disc[v] < 0) {
        parent[v] = u;
        disc[v] = low[v] = timer++;
        edge_stack.emplace_back(u, v);
        call_stack.push_back(v);
      } else if (v != parent[u] && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
      continue;
    }
    call_stack.pop_back();
    Vertex p = parent[u];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[u]);
    if (low[u] >= disc[p]) {
      VertexSet block(n);
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.insert(e.first);
        block.insert(e.second);
        if (e.first == p && e.second == u) break;
      }
      out.push_back(std::move(block));
    }
  }

  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
  return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const auto& b : blocks(g)) {
    for (Vertex v : b.members()) ++hits[v];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hits[v] >= 2) out.push_back(v);
  }
  return out;
}

} // namespace triameter
