#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<int> bfs_without(const Graph& g, Vertex src, Vertex removed_vertex, std::pair<Vertex, Vertex> removed_edge) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (src == removed_vertex) return dist;
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u)) {
      if (v == removed_vertex) continue;
      if ((u == removed_edge.first && v == removed_edge.second) || (u == removed_edge.second && v == removed_edge.first)) continue;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

Decoded decode_graph6(const std::string& s) {
  std::string body = s;
  if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
  if (body.empty()) throw std::runtime_error("empty");
  std::vector<int> six;
  for (char ch : body) {
    int c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw std::runtime_error("bad byte");
    six.push_back(c - 63);
  }
  std::size_t pos = 0;
  long n = 0;
  if (six[0] < 63) {
    n = six[0];
    pos = 1;
  } else if (six.size() > 1 && six[1] == 63) {
    for (int k = 2; k < 8; ++k) n = n * 64 + six.at(k);
    pos = 8;
  } else {
    for (int k = 1; k < 4; ++k) n = n * 64 + six.at(k);
    pos = 4;
  }
  std::string bits;
  for (std::size_t k = pos; k < six.size(); ++k) {
    for (int b = 5; b >= 0; --b) bits.push_back(((six[k] >> b) & 1) ? '1' : '0');
  }
  Decoded out;
  out.n = static_cast<int>(n);
  out.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::size_t k = 0;
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      if (k >= bits.size()) throw std::runtime_error("short payload");
      if (bits[k++] == '1') out.adj[i][j] = out.adj[j][i] = true;
    }
  }
  return out;
}

Matrix floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  Matrix d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (Vertex j : g.neighbors(i)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

int triameter(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  int best = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) best = std::max(best, d[a][b] + d[a][c] + d[b][c]);
  return best;
}

int diameter(const Matrix& d) {
  int best = 0;
  for (const auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best;
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  const int n = g.order();
  if (n == 1) return {{0}};
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  UnionFind uf(m);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      bool together = true;
      for (Vertex v = 0; v < n && together; ++v) {
        std::vector<Vertex> ends;
        for (Vertex x : {edges[e].first, edges[e].second, edges[f].first, edges[f].second}) {
          if (x != v) ends.push_back(x);
        }
        auto dist = bfs_without(g, ends.front(), v, {-1, -1});
        for (Vertex x : ends) together = together && dist[x] >= 0;
      }
      if (together) uf.unite(e, f);
    }
  }
  std::vector<std::set<Vertex>> groups(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    groups[uf.find(e)].insert(edges[e].first);
    groups[uf.find(e)].insert(edges[e].second);
  }
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : groups) {
    if (!s.empty()) out.emplace_back(s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_block_graph(const Graph& g) {
  for (const auto& b : blocks(g))
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.adjacent(b[i], b[j])) return false;
  return true;
}

bool four_point_literal(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t)
          if (d[x][y] + d[z][t] > std::max(d[x][z] + d[y][t], d[x][t] + d[y][z])) return false;
  return true;
}

bool is_distance_hereditary_by_subgraphs(const Graph& g) {
  const int n = g.order();
  const auto full = floyd_warshall(g);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<Vertex> keep;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) keep.push_back(v);
    std::vector<triameter::Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (g.adjacent(keep[i], keep[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    auto sub = Graph::from_edge_list(static_cast<int>(keep.size()), edges);
    auto d = floyd_warshall(sub);
    bool connected = true;
    for (const auto& row : d)
      for (int x : row) connected = connected && x >= 0;
    if (!connected) continue;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (d[i][j] != full[keep[i]][keep[j]]) return false;
  }
  return true;
}

namespace {

std::set<int> interval(const Matrix& d, int u, int v) {
  std::set<int> s;
  for (int x = 0; x < static_cast<int>(d.size()); ++x)
    if (d[u][x] + d[x][v] == d[u][v]) s.insert(x);
  return s;
}

std::size_t meet_size(const Matrix& d, int a, int b, int c) {
  auto ab = interval(d, a, b);
  auto ac = interval(d, a, c);
  auto bc = interval(d, b, c);
  std::size_t k = 0;
  for (int x : ab)
    if (ac.count(x) && bc.count(x)) ++k;
  return k;
}

} // namespace

bool is_median(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet_size(d, a, b, c) != 1) return false;
  return true;
}

bool is_modular(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet_size(d, a, b, c) == 0) return false;
  return true;
}

std::vector<Vertex> articulation_points(const Graph& g) {
  std::vector<Vertex> out;
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    Vertex start = v == 0 ? 1 : 0;
    if (start >= n) continue;
    auto dist = bfs_without(g, start, v, {-1, -1});
    for (Vertex x = 0; x < n; ++x) {
      if (x != v && dist[x] < 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

int girth_or_zero(const Graph& g) {
  int best = 0;
  for (auto [u, v] : g.edges()) {
    auto dist = bfs_without(g, u, -1, {u, v});
    if (dist[v] >= 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best;
}

std::uint64_t connected_labeled_count(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) {
    std::uint64_t total = std::uint64_t{1} << (k * (k - 1) / 2);
    for (int j = 1; j < k; ++j) total -= binom(k - 1, j - 1) * c[j] * (std::uint64_t{1} << ((k - j) * (k - j - 1) / 2));
    c[k] = total;
  }
  return c[n];
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<triameter::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<triameter::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

} // namespace oracle
