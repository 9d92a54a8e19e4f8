#pragma once

#include <optional>
#include <vector>

#include "triameter/distance.hpp"
#include "triameter/graph.hpp"

namespace triameter {

struct ClassProfile {
  bool tree = false;
  bool block = false;
  bool median = false;
  bool modular = false;
  bool distance_hereditary = false;
  bool antipodal = false;
  /// antipode[u] = u' with [u, u'] = V. Present iff antipodal.
  std::optional<std::vector<Vertex>> antipode;

  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

/// Every block induces a clique. Throws Errc::Disconnected.
bool is_block_graph(const Graph& g);

/// d(x,y) + d(z,t) <= max(d(x,z) + d(y,t), d(x,t) + d(y,z)) for every
/// quadruple. Characterizes block graphs among connected graphs.
bool four_point_holds(const DistanceMatrix& dm);

/// For every quadruple, at least two of the three pairing sums
/// d(a,b)+d(c,d), d(a,c)+d(b,d), d(a,d)+d(b,c) coincide.
bool is_distance_hereditary(const DistanceMatrix& dm);

/// |[u,v] & [u,w] & [v,w]| = 1 for every triple.
bool is_median(const DistanceMatrix& dm);

/// [u,v] & [u,w] & [v,w] is non-empty for every triple.
bool is_modular(const DistanceMatrix& dm);

/// The antipode map, or nullopt when some vertex has no partner u' with
/// [u, u'] = V. Two partners for one vertex is impossible in a metric and
/// raises Errc::AmbiguousAntipode.
std::optional<std::vector<Vertex>> antipode_map(const DistanceMatrix& dm);

/// All predicates at once. Throws Errc::Disconnected.
ClassProfile classify(const Graph& g);
ClassProfile classify(const Graph& g, const DistanceMatrix& dm);

} // namespace triameter
