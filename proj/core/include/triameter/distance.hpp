#pragma once

#include <span>
#include <vector>

#include "triameter/graph.hpp"

namespace triameter {

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
public:
  /// n breadth-first sweeps. Throws Errc::Disconnected.
  static DistanceMatrix of(const Graph& g);

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const noexcept { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int at(Vertex u, Vertex v) const;
  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  DistanceMatrix() = default;

  int n_ = 0;
  std::vector<int> dist_;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Hop distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// {x : d(u,x) + d(x,v) = d(u,v)}.
VertexSet metric_interval(const DistanceMatrix& dm, Vertex u, Vertex v);

} // namespace triameter
