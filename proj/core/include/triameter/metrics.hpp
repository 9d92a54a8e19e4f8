#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "triameter/distance.hpp"
#include "triameter/graph.hpp"

namespace triameter {

using VertexPair = std::pair<Vertex, Vertex>;
using Triple = std::array<Vertex, 3>;

struct DiametralCertificate {
  int value = 0;
  /// Every pair (x, y), x < y, at distance value; lexicographic order.
  std::vector<VertexPair> pairs;
  /// Union of the pairs. For K1 the single vertex, by convention.
  VertexSet peripheral;
};

enum class TriameterMethod { BruteForce, BlockFast, TreeLinear, AntipodalFormula };

std::string_view to_string(TriameterMethod method);

struct TriametralCertificate {
  int value = 0;
  /// Sorted witness triples in lexicographic order. The brute-force method
  /// lists all of them; fast methods list one.
  ///
  /// For n >= 3 witnesses have distinct vertices. Orders 1 and 2 follow the
  /// literal definition, which lets vertices repeat.
  std::vector<Triple> triples;
  TriameterMethod method = TriameterMethod::BruteForce;
};

DiametralCertificate diameter(const DistanceMatrix& dm);

/// d(u,v) + d(u,w) + d(v,w). Repeated vertices are allowed.
int triple_perimeter(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex w);

/// Exhaustive O(n^3) scan over the distance table.
TriametralCertificate triameter_bruteforce(const DistanceMatrix& dm);

/// Block graphs only: any diametral pair (x, y) extends, so
/// tr = d(x,y) + max_z (d(x,z) + d(y,z)). Throws Errc::NotBlockGraph.
TriametralCertificate triameter_block_fast(const Graph& g, const DistanceMatrix& dm);

/// Trees only: double-sweep BFS for a diametral pair and one extension scan,
/// linear time and no distance table. Throws Errc::NotATree.
TriametralCertificate triameter_tree_linear(const Graph& g);

/// Antipodal graphs: tr = 2 diam, witnessed by (u, v, v').
/// Throws Errc::NotAntipodal when the map is not a valid antipode map.
TriametralCertificate triameter_antipodal(const DistanceMatrix& dm, std::span<const Vertex> antipode);

} // namespace triameter
