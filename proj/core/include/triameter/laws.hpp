#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triameter/graph.hpp"

namespace triameter {

/// Order and leaf count of a tree, n >= 4 and 3 <= l <= n-1.
class TreeParams {
public:
  /// Throws Errc::BadParams.
  TreeParams(int n, int l);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return (n_ - 1) % l_; }

private:
  int n_;
  int l_;
};

/// 6 floor((n-1)/l) + 2 min((n-1) mod l, 3). Tight for every admissible pair.
int tree_bound_optimal(const TreeParams& p);

/// ceil(4(n-1)/(l-1)), the older and weaker bound.
int tree_bound_baseline(const TreeParams& p);

enum class Law {
  GirthBound,
  DiamSandwich,
  AntipodalTriameter,
  HypercubeTriameter,
  CartesianAdditivity,
  AntipodalExtension,
  TreeBoundOptimal,
  TreeBoundBaseline,
  BlockTripleContainsDiametral,
  BlockPairExtends,
};

std::string_view to_string(Law law);
/// Throws Errc::UnknownName.
Law law_from_string(std::string_view name);
std::vector<Law> all_laws();

enum class VerdictStatus { Holds, Violated, PreconditionFailed };

std::string_view to_string(VerdictStatus status);

struct LawVerdict {
  Law law = Law::GirthBound;
  VerdictStatus status = VerdictStatus::Holds;
  bool holds = false;
  long lhs = 0;
  long rhs = 0;
  /// Quantity squeezed between lhs and rhs, for two-sided laws.
  std::optional<long> middle;
  /// Offending vertices on violation.
  std::vector<Vertex> witness;
  std::string detail;
};

struct LawInput {
  std::optional<Graph> graph;
  /// Second factor for the Cartesian law.
  std::optional<Graph> other;
  /// Cube dimension for the hypercube law.
  int dimension = 0;
};

/// Evaluates one law. A graph outside the law's class yields
/// VerdictStatus::PreconditionFailed, never a silent pass. Missing inputs
/// throw Errc::PreconditionFailed.
LawVerdict check_law(Law law, const LawInput& input);

} // namespace triameter
