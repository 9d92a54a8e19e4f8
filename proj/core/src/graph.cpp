#include "triameter/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "triameter/error.hpp"

namespace triameter {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::Empty: return "Empty";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::BadChar: return "BadChar";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::BadHeader: return "BadHeader";
    case Errc::SourceParse: return "SourceParse";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotBlockGraph: return "NotBlockGraph";
    case Errc::NotATree: return "NotATree";
    case Errc::NotAntipodal: return "NotAntipodal";
    case Errc::AmbiguousAntipode: return "AmbiguousAntipode";
    case Errc::BadArity: return "BadArity";
    case Errc::SizeZero: return "SizeZero";
    case Errc::BadParams: return "BadParams";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::UnknownName: return "UnknownName";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {

void check_member(int universe, Vertex v) {
  if (v < 0 || v >= universe) {
    throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
  }
}

} // namespace

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  check_member(universe_, v);
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check_member(universe_, v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check_member(universe_, v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::count() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw Error(Errc::OutOfRange, "vertex set universes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw Error(Errc::OutOfRange, "vertex set universes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n <= 0) throw Error(Errc::Empty, "graph must have at least one vertex");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    check_member(n, u);
    check_member(n, v);
    if (u == v) throw Error(Errc::SelfLoop, "loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  int twice = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice += static_cast<int>(nbrs.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_member(order(), v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  check_member(order(), v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> Graph::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (adjacency_[v].size() == 1) out.push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");
}

} // namespace triameter
