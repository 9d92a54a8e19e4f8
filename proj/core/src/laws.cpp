#include "triameter/laws.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "triameter/classes.hpp"
#include "triameter/distance.hpp"
#include "triameter/error.hpp"
#include "triameter/families.hpp"
#include "triameter/metrics.hpp"
#include "triameter/structure.hpp"

namespace triameter {

TreeParams::TreeParams(int n, int l) : n_(n), l_(l) {
  if (n < 4 || l < 3 || l > n - 1) {
    throw Error(Errc::BadParams, "need n >= 4 and 3 <= l <= n-1, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
  }
}

int tree_bound_optimal(const TreeParams& p) { return 6 * ((p.n() - 1) / p.l()) + 2 * std::min(p.m(), 3); }

int tree_bound_baseline(const TreeParams& p) {
  const int num = 4 * (p.n() - 1);
  const int den = p.l() - 1;
  return (num + den - 1) / den;
}

namespace {

constexpr std::array<std::pair<Law, std::string_view>, 10> kLawNames{{
    {Law::GirthBound, "girth_bound"},
    {Law::DiamSandwich, "diam_sandwich"},
    {Law::AntipodalTriameter, "antipodal_triameter"},
    {Law::HypercubeTriameter, "hypercube_triameter"},
    {Law::CartesianAdditivity, "cartesian_additivity"},
    {Law::AntipodalExtension, "antipodal_extension"},
    {Law::TreeBoundOptimal, "tree_bound_optimal"},
    {Law::TreeBoundBaseline, "tree_bound_baseline"},
    {Law::BlockTripleContainsDiametral, "block_triple_contains_diametral"},
    {Law::BlockPairExtends, "block_pair_extends"},
}};

const Graph& need_graph(const std::optional<Graph>& g, std::string_view what) {
  if (!g) throw Error(Errc::PreconditionFailed, "law needs " + std::string(what));
  return *g;
}

LawVerdict precondition_failed(Law law, std::string detail) {
  LawVerdict v;
  v.law = law;
  v.status = VerdictStatus::PreconditionFailed;
  v.holds = false;
  v.detail = std::move(detail);
  return v;
}

LawVerdict compared(Law law, long lhs, long rhs, bool holds) {
  LawVerdict v;
  v.law = law;
  v.lhs = lhs;
  v.rhs = rhs;
  v.holds = holds;
  v.status = holds ? VerdictStatus::Holds : VerdictStatus::Violated;
  return v;
}

int max_pairwise(const DistanceMatrix& dm, const Triple& t) {
  return std::max({dm(t[0], t[1]), dm(t[0], t[2]), dm(t[1], t[2])});
}

int best_perimeter_with(const DistanceMatrix& dm, Vertex x, Vertex y) {
  int best = 0;
  for (Vertex z = 0; z < dm.order(); ++z) best = std::max(best, triple_perimeter(dm, x, y, z));
  return best;
}

} // namespace

std::string_view to_string(Law law) {
  for (const auto& [l, name] : kLawNames) {
    if (l == law) return name;
  }
  return "unknown";
}

Law law_from_string(std::string_view name) {
  for (const auto& [l, n] : kLawNames) {
    if (n == name) return l;
  }
  throw Error(Errc::UnknownName, "unknown law \"" + std::string(name) + "\"");
}

std::vector<Law> all_laws() {
  std::vector<Law> out;
  for (const auto& entry : kLawNames) out.push_back(entry.first);
  return out;
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Violated: return "violated";
    case VerdictStatus::PreconditionFailed: return "precondition_failed";
  }
  return "unknown";
}

LawVerdict check_law(Law law, const LawInput& input) {
  if (law == Law::HypercubeTriameter) {
    if (input.dimension < 1) throw Error(Errc::PreconditionFailed, "hypercube law needs a dimension >= 1");
    auto cube = build({Family::Hypercube, {input.dimension}});
    auto tr = triameter_bruteforce(DistanceMatrix::of(cube));
    auto v = compared(law, tr.value, 2L * input.dimension, tr.value == 2 * input.dimension);
    if (!v.holds) v.witness.assign(tr.triples.front().begin(), tr.triples.front().end());
    return v;
  }

  const Graph& g = need_graph(input.graph, "a graph");
  if (!is_connected(g)) return precondition_failed(law, "graph is not connected");

  if (law == Law::CartesianAdditivity) {
    const Graph& h = need_graph(input.other, "a second factor");
    if (!is_connected(h)) return precondition_failed(law, "second factor is not connected");
    const int trg = triameter_bruteforce(DistanceMatrix::of(g)).value;
    const int trh = triameter_bruteforce(DistanceMatrix::of(h)).value;
    const int trp = triameter_bruteforce(DistanceMatrix::of(cartesian_product(g, h))).value;
    return compared(law, trp, trg + trh, trp == trg + trh);
  }

  const auto dm = DistanceMatrix::of(g);
  const auto diam = diameter(dm);
  const auto tr = triameter_bruteforce(dm);

  switch (law) {
    case Law::GirthBound: {
      auto gi = girth(g);
      auto v = compared(law, tr.value, gi.value_or(0), !gi || tr.value >= *gi);
      if (!gi) v.detail = "acyclic; holds vacuously";
      return v;
    }
    case Law::DiamSandwich: {
      auto v = compared(law, 2L * diam.value, 3L * diam.value, 2 * diam.value <= tr.value && tr.value <= 3 * diam.value);
      v.middle = tr.value;
      return v;
    }
    case Law::AntipodalTriameter: {
      if (!antipode_map(dm)) return precondition_failed(law, "graph is not antipodal");
      return compared(law, tr.value, 2L * diam.value, tr.value == 2 * diam.value);
    }
    case Law::AntipodalExtension: {
      auto anti = antipode_map(dm);
      if (!anti) return precondition_failed(law, "graph is not antipodal");
      long worst = tr.value;
      std::vector<Vertex> witness;
      for (Vertex u = 0; u < dm.order(); ++u) {
        for (Vertex v = 0; v < dm.order(); ++v) {
          int p = triple_perimeter(dm, u, v, (*anti)[v]);
          if (p < worst) {
            worst = p;
            witness = {u, v};
          }
        }
      }
      auto verdict = compared(law, worst, tr.value, worst == tr.value);
      verdict.witness = witness;
      return verdict;
    }
    case Law::TreeBoundOptimal:
    case Law::TreeBoundBaseline: {
      if (!is_tree(g)) return precondition_failed(law, "graph is not a tree");
      const int n = g.order();
      const int l = static_cast<int>(g.leaves().size());
      if (n < 4 || l < 3) return precondition_failed(law, "tree bounds need n >= 4 and at least 3 leaves");
      TreeParams p(n, l);
      const int bound = law == Law::TreeBoundOptimal ? tree_bound_optimal(p) : tree_bound_baseline(p);
      auto v = compared(law, tr.value, bound, tr.value >= bound);
      if (!v.holds) v.witness.assign(tr.triples.front().begin(), tr.triples.front().end());
      return v;
    }
    case Law::BlockTripleContainsDiametral: {
      if (!is_block_graph(g)) return precondition_failed(law, "graph is not a block graph");
      long worst = diam.value;
      std::vector<Vertex> witness;
      for (const auto& t : tr.triples) {
        int m = max_pairwise(dm, t);
        if (m < worst) {
          worst = m;
          witness.assign(t.begin(), t.end());
        }
      }
      auto v = compared(law, worst, diam.value, worst == diam.value);
      v.witness = witness;
      return v;
    }
    case Law::BlockPairExtends: {
      if (!is_block_graph(g)) return precondition_failed(law, "graph is not a block graph");
      long worst = tr.value;
      std::vector<Vertex> witness;
      for (auto [x, y] : diam.pairs) {
        int best = best_perimeter_with(dm, x, y);
        if (best < worst) {
          worst = best;
          witness = {x, y};
        }
      }
      auto v = compared(law, worst, tr.value, worst == tr.value);
      v.witness = witness;
      return v;
    }
    case Law::HypercubeTriameter:
    case Law::CartesianAdditivity:
      break;
  }
  throw Error(Errc::UnknownName, "unhandled law");
}

} // namespace triameter
