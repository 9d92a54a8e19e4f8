#include "triameter/families.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "triameter/error.hpp"

namespace triameter {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array kFamilies{
    FamilyInfo{Family::Path, "path", 1},
    FamilyInfo{Family::Cycle, "cycle", 1},
    FamilyInfo{Family::Star, "star", 1},
    FamilyInfo{Family::Bistar, "bistar", 2},
    FamilyInfo{Family::Complete, "complete", 1},
    FamilyInfo{Family::CompleteBipartite, "complete_bipartite", 2},
    FamilyInfo{Family::Hypercube, "hypercube", 1},
};

const FamilyInfo& info(Family f) {
  return *std::find_if(kFamilies.begin(), kFamilies.end(), [f](const FamilyInfo& i) { return i.family == f; });
}

constexpr int kMaxCubeDimension = 20;

} // namespace

std::string_view to_string(Family family) { return info(family).name; }

Family family_from_string(std::string_view name) {
  for (const auto& i : kFamilies) {
    if (i.name == name) return i.family;
  }
  throw Error(Errc::UnknownName, "unknown family \"" + std::string(name) + "\"");
}

Graph build(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  if (spec.params.size() != fi.arity) {
    throw Error(Errc::BadArity, std::string(fi.name) + " takes " + std::to_string(fi.arity) + " parameter(s), got " +
                                    std::to_string(spec.params.size()));
  }
  for (int p : spec.params) {
    if (p < 1) throw Error(Errc::SizeZero, std::string(fi.name) + " parameters must be at least 1");
  }

  std::vector<Edge> edges;
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Path: {
      for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
      return Graph::from_edge_list(p[0], edges);
    }
    case Family::Cycle: {
      if (p[0] < 3) throw Error(Errc::BadParams, "cycle needs at least 3 vertices");
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(i, (i + 1) % p[0]);
      return Graph::from_edge_list(p[0], edges);
    }
    case Family::Star: {
      for (int i = 1; i <= p[0]; ++i) edges.emplace_back(0, i);
      return Graph::from_edge_list(p[0] + 1, edges);
    }
    case Family::Bistar: {
      edges.emplace_back(0, 1);
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(0, 2 + i);
      for (int i = 0; i < p[1]; ++i) edges.emplace_back(1, 2 + p[0] + i);
      return Graph::from_edge_list(p[0] + p[1] + 2, edges);
    }
    case Family::Complete: {
      for (int i = 0; i < p[0]; ++i) {
        for (int j = i + 1; j < p[0]; ++j) edges.emplace_back(i, j);
      }
      return Graph::from_edge_list(p[0], edges);
    }
    case Family::CompleteBipartite: {
      for (int i = 0; i < p[0]; ++i) {
        for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
      }
      return Graph::from_edge_list(p[0] + p[1], edges);
    }
    case Family::Hypercube: {
      if (p[0] > kMaxCubeDimension) throw Error(Errc::TooLarge, "hypercube dimension above 20");
      const int n = 1 << p[0];
      for (int v = 0; v < n; ++v) {
        for (int bit = 0; bit < p[0]; ++bit) {
          int w = v ^ (1 << bit);
          if (v < w) edges.emplace_back(v, w);
        }
      }
      return Graph::from_edge_list(n, edges);
    }
  }
  throw Error(Errc::UnknownName, "unhandled family");
}

Graph extremal_tree(int n, int l) {
  if (n < 4 || l < 3 || l > n - 1) {
    throw Error(Errc::BadParams, "need n >= 4 and 3 <= l <= n-1, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
  }
  const int base = (n - l - 1) / l;
  const int longer = (n - 1) % l;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int leg = 0; leg < l; ++leg) {
    // A star edge subdivided k times becomes a leg of k + 1 edges.
    const int length = base + 1 + (leg < longer ? 1 : 0);
    Vertex prev = 0;
    for (int step = 0; step < length; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edge_list(next, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_connected(g);
  require_connected(h);
  const int ng = g.order();
  const int nh = h.order();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < ng; ++i) {
    for (auto [a, b] : h.edges()) edges.emplace_back(i * nh + a, i * nh + b);
  }
  for (auto [a, b] : g.edges()) {
    for (Vertex j = 0; j < nh; ++j) edges.emplace_back(a * nh + j, b * nh + j);
  }
  return Graph::from_edge_list(ng * nh, edges);
}

Vertex Fixture::at(std::string_view label) const {
  for (const auto& [name, v] : labels) {
    if (name == label) return v;
  }
  throw Error(Errc::UnknownName, "fixture has no vertex labelled \"" + std::string(label) + "\"");
}

namespace {

Fixture make_fixture(std::vector<std::string> names, std::initializer_list<Edge> edges) {
  Fixture f{Graph::from_edge_list(static_cast<int>(names.size()), edges), {}};
  for (std::size_t i = 0; i < names.size(); ++i) f.labels.emplace_back(std::move(names[i]), static_cast<Vertex>(i));
  return f;
}

} // namespace

Fixture fixture(std::string_view name) {
  if (name == "fig2_theta") {
    // Three internally disjoint x..m4 paths of length 4 plus the pendant y.
    // b and c sit in the middle of the lower and bottom paths, a on the top.
    return make_fixture({"x", "m1", "b", "m3", "m4", "y", "t1", "a", "t3", "b1", "c", "b3"},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {6, 7}, {7, 8}, {8, 4}, {0, 9}, {9, 10}, {10, 11}, {11, 4}});
  }
  if (name == "fig3_G") {
    return make_fixture({"y", "m", "a", "b", "c", "x"}, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
  }
  if (name == "fig3_H") {
    return make_fixture({"a", "b", "c", "x", "m", "y"},
                        {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
  }
  if (name == "fig4_median") {
    return make_fixture({"a", "m", "b", "c", "x"}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  }
  throw Error(Errc::UnknownFixture, "no fixture named \"" + std::string(name) + "\"");
}

std::vector<std::string> fixture_names() { return {"fig2_theta", "fig3_G", "fig3_H", "fig4_median"}; }

Graph tree_from_pruefer(std::span<const Vertex> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex v : seq) {
    if (v < 0 || v >= n) throw Error(Errc::OutOfRange, "Pruefer entry " + std::to_string(v));
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edge_list(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(Errc::Empty, "tree needs at least one vertex");
  if (n == 1) return Graph::from_edge_list(1, {});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> seq(static_cast<std::size_t>(n - 2));
  for (auto& v : seq) v = pick(rng);
  return tree_from_pruefer(seq);
}

} // namespace triameter
