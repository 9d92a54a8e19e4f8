#pragma once

#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triameter/graph.hpp"

namespace triameter {

enum class Family { Path, Cycle, Star, Bistar, Complete, CompleteBipartite, Hypercube };

std::string_view to_string(Family family);
/// Accepts the names returned by to_string. Throws Errc::UnknownName.
Family family_from_string(std::string_view name);

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

/// Vertex numbering per family:
///   path(n)                 0-1-...-(n-1)
///   cycle(n)                path plus (n-1, 0); n >= 3
///   star(l)                 center 0, leaves 1..l
///   bistar(p, q)            centers 0 and 1; leaves 2..p+1 on 0, p+2..p+q+1 on 1
///   complete(n)             0..n-1
///   complete_bipartite(a,b) sides 0..a-1 and a..a+b-1
///   hypercube(d)            vertex i is the d-bit word of i
Graph build(const FamilySpec& spec);

/// Subdivided star on n vertices with l leaves whose legs differ in length by
/// at most one: the first (n-1) mod l legs get one extra vertex. Center is 0
/// and each leg is numbered consecutively outward from it.
Graph extremal_tree(int n, int l);

/// (i, j) maps to i * |V(h)| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

struct Fixture {
  Graph graph;
  /// Label to vertex index, in vertex order.
  std::vector<std::pair<std::string, Vertex>> labels;

  Vertex at(std::string_view label) const;
};

/// Named example graphs: fig2_theta, fig3_G, fig3_H, fig4_median.
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Uniform random labeled tree from a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Tree encoded by a Pruefer sequence over 0..n-1, n = seq.size() + 2.
Graph tree_from_pruefer(std::span<const Vertex> seq);

} // namespace triameter
