#pragma once

#include <optional>
#include <vector>

#include "triameter/graph.hpp"

namespace triameter {

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Biconnected components of a connected graph, each as a vertex set,
/// ordered by smallest member. K1 yields the single block {0}.
std::vector<VertexSet> blocks(const Graph& g);

/// Vertices that lie in two or more blocks.
std::vector<Vertex> cut_vertices(const Graph& g);

} // namespace triameter
