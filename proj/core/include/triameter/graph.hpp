#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace triameter {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-universe bitset over the vertices 0..n-1.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<Vertex> members);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on 0..n-1 with sorted adjacency lists.
///
/// Instances are immutable once built. Construction rejects self-loops,
/// out-of-range endpoints and the empty vertex set; repeated edges collapse.
class Graph {
public:
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Vertices of degree one.
  std::vector<Vertex> leaves() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// True for connected graphs with exactly n-1 edges.
bool is_tree(const Graph& g);

/// Throws Errc::Disconnected unless g is connected.
void require_connected(const Graph& g);

} // namespace triameter
