#include "triameter/explorer.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <cstdlib>
#include <string>
#include <thread>

#include "triameter/error.hpp"
#include "triameter/io.hpp"
#include "triameter/metrics.hpp"

namespace triameter {

std::uint64_t edge_subset_count(int n) {
  if (n < 1) throw Error(Errc::Empty, "order must be at least 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(Errc::TooLarge, "built-in enumeration stops at n = 7; supply larger graphs as a graph6 file");
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void enumerate_connected_range(int n, std::uint64_t first, std::uint64_t last,
                               const std::function<void(const Graph&)>& visit) {
  last = std::min(last, edge_subset_count(n));
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::uint32_t everyone = (1U << n) - 1;
  std::vector<Edge> edges;
  std::array<std::uint32_t, kMaxEnumerationOrder> adj{};
  for (std::uint64_t mask = first; mask < last; ++mask) {
    adj.fill(0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        adj[pairs[k].first] |= 1U << pairs[k].second;
        adj[pairs[k].second] |= 1U << pairs[k].first;
      }
    }
    std::uint32_t reached = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if ((frontier >> v) & 1U) next |= adj[v];
      }
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached != everyone) continue;
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    }
    visit(Graph::from_edge_list(n, edges));
  }
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit) {
  enumerate_connected_range(n, 0, edge_subset_count(n), visit);
}

namespace {

constexpr std::array<std::pair<Hypothesis, std::string_view>, 4> kHypothesisNames{{
    {Hypothesis::TriametralContainsDiametral, "triametral_contains_diametral"},
    {Hypothesis::TriametralContainsPeripheral, "triametral_contains_peripheral"},
    {Hypothesis::DiametralPairExtends, "diametral_pair_extends"},
    {Hypothesis::PeripheralVertexExtends, "peripheral_vertex_extends"},
}};

constexpr std::array<std::pair<std::string_view, Hypothesis>, 4> kHypothesisAliases{{
    {"q3", Hypothesis::TriametralContainsDiametral},
    {"q3'", Hypothesis::TriametralContainsPeripheral},
    {"q4", Hypothesis::DiametralPairExtends},
    {"q4'", Hypothesis::PeripheralVertexExtends},
}};

constexpr std::array<std::pair<ClassFilter, std::string_view>, 7> kFilterNames{{
    {ClassFilter::Any, "any"},
    {ClassFilter::Tree, "tree"},
    {ClassFilter::Block, "block"},
    {ClassFilter::Median, "median"},
    {ClassFilter::Modular, "modular"},
    {ClassFilter::DistanceHereditary, "distance_hereditary"},
    {ClassFilter::Antipodal, "antipodal"},
}};

struct Certificates {
  DiametralCertificate diam;
  TriametralCertificate tr;
};

Certificates certify(const DistanceMatrix& dm) { return {diameter(dm), triameter_bruteforce(dm)}; }

HypothesisVerdict evaluate(const DistanceMatrix& dm, const Certificates& c, Hypothesis h) {
  HypothesisVerdict out;
  auto fail_triple = [&](const Triple& t) {
    out.holds = false;
    out.witness.assign(t.begin(), t.end());
    out.witness_distances = {dm(t[0], t[1]), dm(t[0], t[2]), dm(t[1], t[2])};
  };
  switch (h) {
    case Hypothesis::TriametralContainsDiametral:
      for (const auto& t : c.tr.triples) {
        if (std::max({dm(t[0], t[1]), dm(t[0], t[2]), dm(t[1], t[2])}) != c.diam.value) {
          fail_triple(t);
          break;
        }
      }
      break;
    case Hypothesis::TriametralContainsPeripheral:
      for (const auto& t : c.tr.triples) {
        if (!c.diam.peripheral.contains(t[0]) && !c.diam.peripheral.contains(t[1]) && !c.diam.peripheral.contains(t[2])) {
          fail_triple(t);
          break;
        }
      }
      break;
    case Hypothesis::DiametralPairExtends:
      for (auto [x, y] : c.diam.pairs) {
        bool extends = false;
        for (Vertex z = 0; z < dm.order() && !extends; ++z) extends = dm(x, y) + dm(x, z) + dm(y, z) == c.tr.value;
        if (!extends) {
          out.holds = false;
          out.witness = {x, y};
          out.witness_distances = {dm(x, y)};
          break;
        }
      }
      break;
    case Hypothesis::PeripheralVertexExtends:
      for (Vertex p : c.diam.peripheral.members()) {
        bool extends = std::any_of(c.tr.triples.begin(), c.tr.triples.end(),
                                   [p](const Triple& t) { return t[0] == p || t[1] == p || t[2] == p; });
        if (!extends) {
          out.holds = false;
          out.witness = {p};
          break;
        }
      }
      break;
  }
  return out;
}

bool graph_only_filter(ClassFilter f) { return f == ClassFilter::Tree || f == ClassFilter::Block; }

bool passes_filter(const Graph& g, const DistanceMatrix* dm, ClassFilter f) {
  switch (f) {
    case ClassFilter::Any: return true;
    case ClassFilter::Tree: return is_tree(g);
    case ClassFilter::Block: return is_block_graph(g);
    case ClassFilter::Median: return is_median(*dm);
    case ClassFilter::Modular: return is_modular(*dm);
    case ClassFilter::DistanceHereditary: return is_distance_hereditary(*dm);
    case ClassFilter::Antipodal: return antipode_map(*dm).has_value();
  }
  return false;
}

// Outcome of one unit of scan work, merged in order afterwards.
struct ChunkResult {
  std::uint64_t scanned = 0;
  std::uint64_t in_class = 0;
  std::vector<CounterexampleReport> reports;
};

void absorb(ScanSummary& summary, ChunkResult& chunk, const ReportSink& sink) {
  summary.graphs_scanned += chunk.scanned;
  summary.in_class += chunk.in_class;
  for (const auto& r : chunk.reports) {
    ++summary.reports;
    ++summary.violations[r.hypothesis];
    if (r.open_question) ++summary.open_question_reports;
    if (!r.verified) summary.all_verified = false;
    if (sink) sink(r);
  }
}

// Runs work(i, result) for i in [0, count) on a pool of threads, handing the
// results to `absorb` strictly in index order, a wave at a time.
template <typename Work>
void run_ordered(std::uint64_t count, unsigned workers, ScanSummary& summary, const ReportSink& sink, Work work) {
  workers = std::max(1U, workers);
  const std::uint64_t wave = std::uint64_t{workers} * 4;
  for (std::uint64_t base = 0; base < count; base += wave) {
    const std::uint64_t span = std::min(wave, count - base);
    std::vector<ChunkResult> results(span);
    if (workers == 1 || span == 1) {
      for (std::uint64_t i = 0; i < span; ++i) work(base + i, results[i]);
    } else {
      std::atomic<std::uint64_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::uint64_t>(workers, span); ++w) {
        pool.emplace_back([&] {
          try {
            for (std::uint64_t i = next++; i < span; i = next++) work(base + i, results[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = span;
          }
        });
      }
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }
    for (auto& r : results) absorb(summary, r, sink);
  }
}

void examine_into(const Graph& g, const ScanOptions& options, ChunkResult& out) {
  ++out.scanned;
  bool in = false;
  auto reports = examine(g, options, &in);
  if (in) ++out.in_class;
  for (auto& r : reports) out.reports.push_back(std::move(r));
}

} // namespace

std::string_view to_string(Hypothesis h) {
  for (const auto& [k, name] : kHypothesisNames) {
    if (k == h) return name;
  }
  return "unknown";
}

Hypothesis hypothesis_from_string(std::string_view name) {
  for (const auto& [k, n] : kHypothesisNames) {
    if (n == name) return k;
  }
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& [alias, k] : kHypothesisAliases) {
    if (alias == lower) return k;
  }
  throw Error(Errc::UnknownName, "unknown hypothesis \"" + std::string(name) + "\"");
}

std::vector<Hypothesis> all_hypotheses() {
  std::vector<Hypothesis> out;
  for (const auto& entry : kHypothesisNames) out.push_back(entry.first);
  return out;
}

std::string_view to_string(ClassFilter f) {
  for (const auto& [k, name] : kFilterNames) {
    if (k == f) return name;
  }
  return "unknown";
}

ClassFilter class_filter_from_string(std::string_view name) {
  for (const auto& [k, n] : kFilterNames) {
    if (n == name) return k;
  }
  throw Error(Errc::UnknownName, "unknown class \"" + std::string(name) + "\"");
}

bool in_class(const Graph& g, const DistanceMatrix& dm, ClassFilter f) { return passes_filter(g, &dm, f); }

HypothesisVerdict check_hypothesis(const DistanceMatrix& dm, Hypothesis h) { return evaluate(dm, certify(dm), h); }

HypothesisVerdict check_hypothesis(const Graph& g, const DistanceMatrix& dm, Hypothesis h) {
  require_connected(g);
  if (g.order() != dm.order()) throw Error(Errc::OutOfRange, "graph and distance table differ in order");
  return check_hypothesis(dm, h);
}

bool verify_report(const CounterexampleReport& report) {
  Graph g = parse_graph6(report.graph6);
  if (g.order() != report.n || g.size() != report.m || !is_connected(g)) return false;
  const auto dm = DistanceMatrix::of(g);
  const int n = g.order();

  // Recomputed directly, without the certificate machinery.
  int diam = 0;
  std::vector<int> ecc(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) ecc[u] = std::max(ecc[u], dm(u, v));
    diam = std::max(diam, ecc[u]);
  }
  auto per = [&](Vertex a, Vertex b, Vertex c) { return dm(a, b) + dm(a, c) + dm(b, c); };
  int tr = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) tr = std::max(tr, per(a, b, c));
    }
  }
  auto peripheral = [&](Vertex v) { return n == 1 || ecc[v] == diam; };

  const auto& w = report.witness;
  for (Vertex v : w) {
    if (v < 0 || v >= n) return false;
  }
  switch (report.hypothesis) {
    case Hypothesis::TriametralContainsDiametral:
      return w.size() == 3 && per(w[0], w[1], w[2]) == tr &&
             std::max({dm(w[0], w[1]), dm(w[0], w[2]), dm(w[1], w[2])}) < diam &&
             report.witness_distances == std::vector<int>{dm(w[0], w[1]), dm(w[0], w[2]), dm(w[1], w[2])};
    case Hypothesis::TriametralContainsPeripheral:
      return w.size() == 3 && per(w[0], w[1], w[2]) == tr && !peripheral(w[0]) && !peripheral(w[1]) &&
             !peripheral(w[2]) &&
             report.witness_distances == std::vector<int>{dm(w[0], w[1]), dm(w[0], w[2]), dm(w[1], w[2])};
    case Hypothesis::DiametralPairExtends: {
      if (w.size() != 2 || dm(w[0], w[1]) != diam || report.witness_distances != std::vector<int>{diam}) return false;
      for (Vertex z = 0; z < n; ++z) {
        if (per(w[0], w[1], z) == tr) return false;
      }
      return true;
    }
    case Hypothesis::PeripheralVertexExtends: {
      if (w.size() != 1 || !peripheral(w[0])) return false;
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex z = 0; z < n; ++z) {
          if (per(w[0], y, z) == tr) return false;
        }
      }
      return true;
    }
  }
  return false;
}

Fingerprint fingerprint(const Graph& g) {
  Fingerprint f;
  f.n = g.order();
  f.m = g.size();
  for (Vertex v = 0; v < g.order(); ++v) f.degrees.push_back(g.degree(v));
  std::sort(f.degrees.begin(), f.degrees.end());
  if (is_connected(g)) {
    const auto dm = DistanceMatrix::of(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) f.distances.push_back(dm(u, v));
    }
    std::sort(f.distances.begin(), f.distances.end());
  }
  return f;
}

std::vector<CounterexampleReport> examine(const Graph& g, const ScanOptions& options, bool* in_class_out) {
  if (in_class_out) *in_class_out = false;
  if (!is_connected(g)) return {};
  if (graph_only_filter(options.class_filter) && !passes_filter(g, nullptr, options.class_filter)) return {};
  const auto dm = DistanceMatrix::of(g);
  if (!graph_only_filter(options.class_filter) && !passes_filter(g, &dm, options.class_filter)) return {};
  if (in_class_out) *in_class_out = true;

  const auto certs = certify(dm);
  std::vector<CounterexampleReport> reports;
  std::optional<ClassProfile> profile;
  std::string g6;
  for (Hypothesis h : options.hypotheses) {
    auto verdict = evaluate(dm, certs, h);
    if (verdict.holds) continue;
    if (!profile) {
      profile = classify(g, dm);
      g6 = write_graph6(g);
    }
    CounterexampleReport r;
    r.graph6 = g6;
    r.n = g.order();
    r.m = g.size();
    r.profile = *profile;
    r.hypothesis = h;
    r.witness = std::move(verdict.witness);
    r.witness_distances = std::move(verdict.witness_distances);

    const bool weak_form = h == Hypothesis::TriametralContainsPeripheral || h == Hypothesis::DiametralPairExtends;
    if (weak_form && profile->median) {
      r.open_question = true;
    } else if (weak_form && profile->distance_hereditary) {
      Hypothesis other = h == Hypothesis::DiametralPairExtends ? Hypothesis::TriametralContainsPeripheral
                                                               : Hypothesis::DiametralPairExtends;
      r.open_question = !evaluate(dm, certs, other).holds;
    }
    r.verified = verify_report(r);
    reports.push_back(std::move(r));
  }
  return reports;
}

unsigned default_workers() {
  if (const char* env = std::getenv("TRIAMETER_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ScanSummary scan_enumerated(int min_n, int max_n, const ScanOptions& options, const ReportSink& sink) {
  if (min_n < 1) throw Error(Errc::Empty, "order must be at least 1");
  if (max_n > kMaxEnumerationOrder) edge_subset_count(max_n);
  const unsigned workers = options.workers == 0 ? default_workers() : options.workers;
  constexpr std::uint64_t kChunk = 1U << 13;
  ScanSummary summary;
  for (int n = min_n; n <= max_n; ++n) {
    const std::uint64_t total = edge_subset_count(n);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    run_ordered(chunks, workers, summary, sink, [&](std::uint64_t i, ChunkResult& out) {
      enumerate_connected_range(n, i * kChunk, (i + 1) * kChunk,
                                [&](const Graph& g) { examine_into(g, options, out); });
    });
  }
  return summary;
}

ScanSummary scan_graphs(std::span<const Graph> graphs, const ScanOptions& options, const ReportSink& sink) {
  const unsigned workers = options.workers == 0 ? default_workers() : options.workers;
  constexpr std::uint64_t kChunk = 64;
  ScanSummary summary;
  const std::uint64_t chunks = (graphs.size() + kChunk - 1) / kChunk;
  run_ordered(chunks, workers, summary, sink, [&](std::uint64_t i, ChunkResult& out) {
    const auto end = std::min<std::uint64_t>(graphs.size(), (i + 1) * kChunk);
    for (std::uint64_t k = i * kChunk; k < end; ++k) examine_into(graphs[k], options, out);
  });
  return summary;
}

} // namespace triameter
