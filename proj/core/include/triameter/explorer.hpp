#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triameter/classes.hpp"
#include "triameter/distance.hpp"
#include "triameter/graph.hpp"

namespace triameter {

/// Largest order the built-in labeled enumerator accepts.
inline constexpr int kMaxEnumerationOrder = 7;

/// Calls visit on every connected labeled graph on n vertices, in ascending
/// order of the edge-subset counter. Bit k of the counter is the k-th pair in
/// graph6 order (0,1), (0,2), (1,2), (0,3), ... Throws Errc::TooLarge for
/// n > kMaxEnumerationOrder and Errc::Empty for n < 1.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

/// Same as enumerate_connected, restricted to counters in [first, last).
void enumerate_connected_range(int n, std::uint64_t first, std::uint64_t last,
                               const std::function<void(const Graph&)>& visit);

/// Number of edge subsets for order n, i.e. 2^(n choose 2).
std::uint64_t edge_subset_count(int n);

enum class Hypothesis {
  /// Every triametral triple contains a diametral pair.
  TriametralContainsDiametral,
  /// Every triametral triple contains a peripheral vertex.
  TriametralContainsPeripheral,
  /// Every diametral pair extends to a triametral triple.
  DiametralPairExtends,
  /// Every peripheral vertex lies in some triametral triple.
  PeripheralVertexExtends,
};

std::string_view to_string(Hypothesis h);
/// Accepts to_string names plus the short aliases q3, q3', q4, q4'.
Hypothesis hypothesis_from_string(std::string_view name);
std::vector<Hypothesis> all_hypotheses();

struct HypothesisVerdict {
  bool holds = true;
  /// Offending triple, pair or single vertex.
  std::vector<Vertex> witness;
  /// Pairwise distances within the witness: (ab, ac, bc) for a triple,
  /// (xy) for a pair, empty for a vertex.
  std::vector<int> witness_distances;
};

/// Throws Errc::Disconnected (via the distance table's construction).
HypothesisVerdict check_hypothesis(const DistanceMatrix& dm, Hypothesis h);
HypothesisVerdict check_hypothesis(const Graph& g, const DistanceMatrix& dm, Hypothesis h);

enum class ClassFilter { Any, Tree, Block, Median, Modular, DistanceHereditary, Antipodal };

std::string_view to_string(ClassFilter f);
ClassFilter class_filter_from_string(std::string_view name);

bool in_class(const Graph& g, const DistanceMatrix& dm, ClassFilter f);

struct CounterexampleReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  ClassProfile profile;
  Hypothesis hypothesis;
  std::vector<Vertex> witness;
  std::vector<int> witness_distances;
  bool verified = false;
  /// Set when the report bears on a question that is still open: a median
  /// graph failing triametral_contains_peripheral or diametral_pair_extends,
  /// or a distance-hereditary graph failing both of those at once.
  bool open_question = false;
};

/// Rebuilds the graph from report.graph6, recomputes every certificate by
/// brute force and confirms that the witness falsifies the hypothesis.
bool verify_report(const CounterexampleReport& report);

/// Isomorphism-invariant summary used to match scan output against known
/// graphs: order, size, sorted degrees and sorted pairwise distances.
struct Fingerprint {
  int n = 0;
  int m = 0;
  std::vector<int> degrees;
  std::vector<int> distances;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Graph& g);

struct ScanOptions {
  ClassFilter class_filter = ClassFilter::Any;
  std::vector<Hypothesis> hypotheses = all_hypotheses();
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct ScanSummary {
  std::uint64_t graphs_scanned = 0;
  std::uint64_t in_class = 0;
  std::uint64_t reports = 0;
  std::uint64_t open_question_reports = 0;
  /// Holds for every report emitted; false means a verification failure.
  bool all_verified = true;
  std::map<Hypothesis, std::uint64_t> violations;
};

using ReportSink = std::function<void(const CounterexampleReport&)>;

/// Checks every connected graph of order min_n..max_n from the built-in
/// enumerator. Reports reach the sink in enumeration order whatever the
/// worker count.
ScanSummary scan_enumerated(int min_n, int max_n, const ScanOptions& options, const ReportSink& sink);

/// Checks each graph of a list, e.g. decoded from a graph6 file. Disconnected
/// graphs are counted as scanned but never in class.
ScanSummary scan_graphs(std::span<const Graph> graphs, const ScanOptions& options, const ReportSink& sink);

/// Reports for one graph, already verified. Empty when g is outside the class.
std::vector<CounterexampleReport> examine(const Graph& g, const ScanOptions& options, bool* in_class_out = nullptr);

/// Worker count from TRIAMETER_WORKERS, falling back to hardware concurrency.
unsigned default_workers();

} // namespace triameter
