#include "triameter/distance.hpp"

#include <string>

#include "triameter/error.hpp"

namespace triameter {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix DistanceMatrix::of(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.dist_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    int* row = dm.dist_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue[0] = s;
    std::size_t tail = 1;
    for (std::size_t head = 0; head < tail; ++head) {
      Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n)) {
      throw Error(Errc::Disconnected, "vertex " + std::to_string(s) + " reaches only " + std::to_string(tail) + " of " +
                                          std::to_string(n) + " vertices");
    }
  }
  return dm;
}

int DistanceMatrix::at(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(Errc::OutOfRange, "vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return (*this)(u, v);
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix::of(g); }

VertexSet metric_interval(const DistanceMatrix& dm, Vertex u, Vertex v) {
  const int duv = dm.at(u, v);
  VertexSet out(dm.order());
  for (Vertex x = 0; x < dm.order(); ++x) {
    if (dm(u, x) + dm(x, v) == duv) out.insert(x);
  }
  return out;
}

} // namespace triameter
