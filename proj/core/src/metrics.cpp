#include "triameter/metrics.hpp"

#include <algorithm>
#include <string>

#include "triameter/classes.hpp"
#include "triameter/error.hpp"

namespace triameter {

std::string_view to_string(TriameterMethod method) {
  switch (method) {
    case TriameterMethod::BruteForce: return "brute_force";
    case TriameterMethod::BlockFast: return "block_fast";
    case TriameterMethod::TreeLinear: return "tree_linear";
    case TriameterMethod::AntipodalFormula: return "antipodal_formula";
  }
  return "unknown";
}

namespace {

Triple sorted_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Third vertex maximizing d(x,z) + d(y,z), smallest index on ties. For
// n >= 3 the endpoints themselves are skipped.
template <typename DistX, typename DistY>
std::pair<Vertex, int> best_extension(int n, Vertex x, Vertex y, DistX dx, DistY dy) {
  Vertex best = -1;
  int best_sum = -1;
  for (Vertex z = 0; z < n; ++z) {
    if (n >= 3 && (z == x || z == y)) continue;
    int s = dx(z) + dy(z);
    if (s > best_sum) {
      best_sum = s;
      best = z;
    }
  }
  return {best, best_sum};
}

} // namespace

DiametralCertificate diameter(const DistanceMatrix& dm) {
  const int n = dm.order();
  DiametralCertificate cert;
  cert.peripheral = VertexSet(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      int d = dm(u, v);
      if (d > cert.value) {
        cert.value = d;
        cert.pairs.clear();
      }
      if (d == cert.value) cert.pairs.emplace_back(u, v);
    }
  }
  if (n == 1) {
    cert.peripheral.insert(0);
    return cert;
  }
  for (auto [u, v] : cert.pairs) {
    cert.peripheral.insert(u);
    cert.peripheral.insert(v);
  }
  return cert;
}

int triple_perimeter(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex w) {
  return dm.at(u, v) + dm.at(u, w) + dm.at(v, w);
}

TriametralCertificate triameter_bruteforce(const DistanceMatrix& dm) {
  const int n = dm.order();
  TriametralCertificate cert;
  cert.method = TriameterMethod::BruteForce;
  cert.value = -1;
  // Orders 1 and 2 admit only triples with repetition.
  const bool distinct = n >= 3;
  for (Vertex a = 0; a < n; ++a) {
    auto ra = dm.row(a);
    for (Vertex b = distinct ? a + 1 : a; b < n; ++b) {
      const int dab = ra[b];
      auto rb = dm.row(b);
      for (Vertex c = distinct ? b + 1 : b; c < n; ++c) {
        int p = dab + ra[c] + rb[c];
        if (p > cert.value) {
          cert.value = p;
          cert.triples.clear();
        }
        if (p == cert.value) cert.triples.push_back({a, b, c});
      }
    }
  }
  return cert;
}

TriametralCertificate triameter_block_fast(const Graph& g, const DistanceMatrix& dm) {
  if (g.order() != dm.order()) throw Error(Errc::OutOfRange, "graph and distance table differ in order");
  if (!is_block_graph(g)) throw Error(Errc::NotBlockGraph, "graph has a block that is not complete");
  const int n = dm.order();
  TriametralCertificate cert;
  cert.method = TriameterMethod::BlockFast;
  if (n == 1) {
    cert.triples.push_back({0, 0, 0});
    return cert;
  }
  // Lexicographically first diametral pair, read off the exact table.
  Vertex x = 0;
  Vertex y = 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dm(u, v) > dm(x, y)) {
        x = u;
        y = v;
      }
    }
  }
  auto rx = dm.row(x);
  auto ry = dm.row(y);
  auto [z, sum] = best_extension(n, x, y, [&](Vertex w) { return rx[w]; }, [&](Vertex w) { return ry[w]; });
  cert.value = dm(x, y) + sum;
  cert.triples.push_back(sorted_triple(x, y, z));
  return cert;
}

TriametralCertificate triameter_tree_linear(const Graph& g) {
  if (!is_tree(g)) throw Error(Errc::NotATree, "graph is not a tree");
  const int n = g.order();
  TriametralCertificate cert;
  cert.method = TriameterMethod::TreeLinear;
  if (n == 1) {
    cert.triples.push_back({0, 0, 0});
    return cert;
  }
  auto farthest = [n](const std::vector<int>& dist) {
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (dist[v] > dist[best]) best = v;
    }
    return best;
  };
  Vertex x = farthest(bfs_distances(g, 0));
  auto dx = bfs_distances(g, x);
  Vertex y = farthest(dx);
  auto dy = bfs_distances(g, y);
  auto [z, sum] = best_extension(n, x, y, [&](Vertex w) { return dx[w]; }, [&](Vertex w) { return dy[w]; });
  cert.value = dx[y] + sum;
  cert.triples.push_back(sorted_triple(x, y, z));
  return cert;
}

TriametralCertificate triameter_antipodal(const DistanceMatrix& dm, std::span<const Vertex> antipode) {
  const int n = dm.order();
  if (static_cast<int>(antipode.size()) != n) throw Error(Errc::NotAntipodal, "antipode map has the wrong length");
  int diam = 0;
  for (Vertex u = 0; u < n; ++u) {
    Vertex w = antipode[u];
    if (w < 0 || w >= n || antipode[w] != u) {
      throw Error(Errc::NotAntipodal, "antipode map is not an involution at vertex " + std::to_string(u));
    }
    for (Vertex x = 0; x < n; ++x) {
      if (dm(u, x) + dm(x, w) != dm(u, w)) {
        throw Error(Errc::NotAntipodal,
                    "vertex " + std::to_string(x) + " is off every " + std::to_string(u) + "-" + std::to_string(w) + " geodesic");
      }
    }
    diam = std::max(diam, dm(u, w));
  }

  TriametralCertificate cert;
  cert.method = TriameterMethod::AntipodalFormula;
  cert.value = 2 * diam;
  if (n == 1) {
    cert.triples.push_back({0, 0, 0});
    return cert;
  }
  if (n == 2) {
    cert.triples.push_back({0, 0, 1});
    return cert;
  }
  // (u, v, v') with d(v, v') = diam; u lies on a v-v' geodesic by definition.
  Vertex v = 0;
  while (dm(v, antipode[v]) != diam) ++v;
  Vertex u = 0;
  while (u == v || u == antipode[v]) ++u;
  cert.triples.push_back(sorted_triple(u, v, antipode[v]));
  return cert;
}

} // namespace triameter
