#include "triameter/classes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "triameter/error.hpp"
#include "triameter/structure.hpp"

namespace triameter {

namespace {

// All metric intervals of a distance table, one bitset row per ordered pair.
class IntervalTable {
public:
  explicit IntervalTable(const DistanceMatrix& dm)
      : n_(dm.order()), words_((dm.order() + 63) / 64),
        bits_(static_cast<std::size_t>(n_) * n_ * words_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      auto ru = dm.row(u);
      for (Vertex v = u; v < n_; ++v) {
        auto rv = dm.row(v);
        std::uint64_t* row = slot(u, v);
        for (Vertex x = 0; x < n_; ++x) {
          if (ru[x] + rv[x] == ru[v]) row[x / 64] |= std::uint64_t{1} << (x % 64);
        }
        std::copy(row, row + words_, slot(v, u));
      }
    }
  }

  // |[a,b] & [a,c] & [b,c]|, saturating at `cap`.
  int meet_count(Vertex a, Vertex b, Vertex c, int cap) const {
    const std::uint64_t* ab = slot(a, b);
    const std::uint64_t* ac = slot(a, c);
    const std::uint64_t* bc = slot(b, c);
    int total = 0;
    for (int w = 0; w < words_ && total < cap; ++w) total += std::popcount(ab[w] & ac[w] & bc[w]);
    return total;
  }

private:
  std::uint64_t* slot(Vertex u, Vertex v) { return bits_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_; }
  const std::uint64_t* slot(Vertex u, Vertex v) const {
    return bits_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

// Visits the three pairing sums of every 4-subset until pred returns false.
template <typename Pred>
bool all_quadruples(const DistanceMatrix& dm, Pred pred) {
  const int n = dm.order();
  for (Vertex a = 0; a < n; ++a) {
    auto ra = dm.row(a);
    for (Vertex b = a + 1; b < n; ++b) {
      auto rb = dm.row(b);
      for (Vertex c = b + 1; c < n; ++c) {
        auto rc = dm.row(c);
        for (Vertex d = c + 1; d < n; ++d) {
          if (!pred(ra[b] + rc[d], ra[c] + rb[d], ra[d] + rb[c])) return false;
        }
      }
    }
  }
  return true;
}

template <typename Pred>
bool all_triples_meet(const DistanceMatrix& dm, Pred pred) {
  IntervalTable table(dm);
  const int n = dm.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (!pred(table.meet_count(a, b, c, 2))) return false;
      }
    }
  }
  return true;
}

} // namespace

bool is_block_graph(const Graph& g) {
  for (const auto& block : blocks(g)) {
    auto members = block.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!g.adjacent(members[i], members[j])) return false;
      }
    }
  }
  return true;
}

bool four_point_holds(const DistanceMatrix& dm) {
  // Each sum at most the larger of the other two: the two largest coincide.
  return all_quadruples(dm, [](int s1, int s2, int s3) {
    return s1 <= std::max(s2, s3) && s2 <= std::max(s1, s3) && s3 <= std::max(s1, s2);
  });
}

bool is_distance_hereditary(const DistanceMatrix& dm) {
  return all_quadruples(dm, [](int s1, int s2, int s3) { return s1 == s2 || s1 == s3 || s2 == s3; });
}

bool is_median(const DistanceMatrix& dm) {
  return all_triples_meet(dm, [](int meet) { return meet == 1; });
}

bool is_modular(const DistanceMatrix& dm) {
  return all_triples_meet(dm, [](int meet) { return meet >= 1; });
}

std::optional<std::vector<Vertex>> antipode_map(const DistanceMatrix& dm) {
  const int n = dm.order();
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  for (Vertex u = 0; u < n; ++u) {
    auto ru = dm.row(u);
    const int ecc = *std::max_element(ru.begin(), ru.end());
    for (Vertex w = 0; w < n; ++w) {
      // A full interval forces d(u, w) to be the eccentricity of u.
      if (ru[w] != ecc) continue;
      auto rw = dm.row(w);
      bool full = true;
      for (Vertex x = 0; x < n && full; ++x) full = ru[x] + rw[x] == ecc;
      if (!full) continue;
      if (map[u] >= 0) {
        throw Error(Errc::AmbiguousAntipode, "vertex " + std::to_string(u) + " has antipodes " + std::to_string(map[u]) +
                                                 " and " + std::to_string(w));
      }
      map[u] = w;
    }
    if (map[u] < 0) return std::nullopt;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (map[map[u]] != u) throw Error(Errc::AmbiguousAntipode, "antipode map is not an involution");
  }
  return map;
}

ClassProfile classify(const Graph& g) { return classify(g, DistanceMatrix::of(g)); }

ClassProfile classify(const Graph& g, const DistanceMatrix& dm) {
  require_connected(g);
  ClassProfile p;
  p.tree = is_tree(g);
  p.block = is_block_graph(g);
  p.median = is_median(dm);
  p.modular = is_modular(dm);
  p.distance_hereditary = is_distance_hereditary(dm);
  p.antipode = antipode_map(dm);
  p.antipodal = p.antipode.has_value();

  if ((p.tree && !(p.block && p.median)) || (p.block && !p.distance_hereditary) || (p.median && !p.modular)) {
    throw std::logic_error("class implications violated; recognizers disagree");
  }
  return p;
}

} // namespace triameter
