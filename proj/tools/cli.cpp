#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "triameter/classes.hpp"
#include "triameter/error.hpp"
#include "triameter/explorer.hpp"
#include "triameter/families.hpp"
#include "triameter/io.hpp"
#include "triameter/laws.hpp"
#include "triameter/metrics.hpp"
#include "triameter/serialize.hpp"

namespace triameter::cli {

namespace {

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

void add_input_options(CLI::App* sub, InputOptions& io) {
  sub->add_option("-i,--input", io.path, "graph file, '-' for stdin")->capture_default_str();
  sub->add_option("-f,--format", io.format, "graph6, edgelist or auto")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
}

std::optional<GraphFormat> format_from_extension(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::Graph6;
  if (ext == ".el" || ext == ".edges" || ext == ".edgelist") return GraphFormat::EdgeList;
  return std::nullopt;
}

std::vector<Graph> load_graphs(const InputOptions& io, std::istream& stdin_stream) {
  std::string text;
  if (io.path == "-") {
    text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
  } else {
    std::ifstream file(io.path);
    if (!file) throw Error(Errc::SourceParse, "cannot open " + io.path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }

  GraphFormat format = GraphFormat::Graph6;
  if (io.format == "graph6") {
    format = GraphFormat::Graph6;
  } else if (io.format == "edgelist") {
    format = GraphFormat::EdgeList;
  } else if (auto by_ext = io.path == "-" ? std::nullopt : format_from_extension(io.path)) {
    format = *by_ext;
  } else {
    std::istringstream probe(text);
    std::string line;
    while (std::getline(probe, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos && line.front() != '#') break;
    }
    format = sniff_format(line);
  }

  std::istringstream stream(text);
  auto graphs = read_graphs(stream, format);
  if (graphs.empty()) throw Error(Errc::SourceParse, "no graphs in input");
  return graphs;
}

Json compute_json(const Graph& g, bool auto_method) {
  require_connected(g);
  const auto dm = DistanceMatrix::of(g);
  const auto diam = diameter(dm);
  TriametralCertificate tr;
  if (!auto_method) {
    tr = triameter_bruteforce(dm);
  } else if (is_tree(g)) {
    tr = triameter_tree_linear(g);
  } else if (is_block_graph(g)) {
    tr = triameter_block_fast(g, dm);
  } else if (auto anti = antipode_map(dm)) {
    tr = triameter_antipodal(dm, *anti);
  } else {
    tr = triameter_bruteforce(dm);
  }
  Json j = {{"diameter", diam.value}, {"triameter", tr.value}, {"method", to_string(tr.method)},
            {"n", g.order()}, {"m", g.size()}};
  j["diametral_pairs"] = to_json(diam)["pairs"];
  j["witnesses"] = to_json(tr)["witnesses"];
  return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triameter and diameter certificates, graph classes, and counterexample scans", "triameter"};
  app.require_subcommand(1);

  InputOptions compute_io;
  std::string method = "auto";
  auto* compute = app.add_subcommand("compute", "diameter and triameter certificates");
  add_input_options(compute, compute_io);
  compute->add_option("--method", method, "brute or auto")->check(CLI::IsMember({"brute", "auto"}))->capture_default_str();

  InputOptions classify_io;
  auto* classify_cmd = app.add_subcommand("classify", "class membership profile");
  add_input_options(classify_cmd, classify_io);

  std::vector<std::string> family_args;
  std::string fixture_name;
  std::vector<int> tree_args;
  std::string out_format = "graph6";
  bool labels = false;
  auto* construct = app.add_subcommand("construct", "emit a named graph");
  auto* fam_opt = construct->add_option("--family", family_args, "family name followed by its sizes")->expected(1, 3);
  auto* fix_opt = construct->add_option("--fixture", fixture_name, "fixture name");
  auto* tree_opt = construct->add_option("--tree", tree_args, "extremal tree order and leaf count")->expected(2);
  fam_opt->excludes(fix_opt)->excludes(tree_opt);
  fix_opt->excludes(tree_opt);
  construct->add_option("--format", out_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  construct->add_flag("--labels", labels, "print the fixture's label table instead of the graph");

  std::vector<int> bound_args;
  auto* bound = app.add_subcommand("bound", "closed-form tree triameter bounds");
  bound->add_option("--tree", bound_args, "order and leaf count")->expected(2)->required();

  InputOptions verify_io;
  std::string law_name;
  int dimension = 0;
  auto* verify = app.add_subcommand("verify", "evaluate one law on every input graph");
  add_input_options(verify, verify_io);
  verify->add_option("--law", law_name, "law identifier")->required();
  verify->add_option("--dimension", dimension, "cube dimension for hypercube_triameter");

  int min_n = 1;
  int max_n = 0;
  std::string class_name = "any";
  std::vector<std::string> hypothesis_names;
  std::string jsonl_path;
  std::string scan_input;
  unsigned workers = 0;
  auto* scan = app.add_subcommand("scan", "search small graphs for hypothesis counterexamples");
  scan->add_option("--min-n", min_n, "smallest enumerated order")->capture_default_str();
  scan->add_option("--max-n", max_n, "largest enumerated order (at most 7)");
  scan->add_option("-i,--input", scan_input, "graph6 file to scan instead of enumerating");
  scan->add_option("--class", class_name, "class filter")->capture_default_str();
  scan->add_option("--hypothesis", hypothesis_names, "hypothesis to check; repeatable, default all");
  scan->add_option("--jsonl", jsonl_path, "write reports here instead of stdout");
  scan->add_option("--workers", workers, "worker threads (default TRIAMETER_WORKERS or all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      for (const auto& g : load_graphs(compute_io, in)) out << compute_json(g, method == "auto").dump() << '\n';
      return kExitOk;
    }

    if (*classify_cmd) {
      for (const auto& g : load_graphs(classify_io, in)) out << to_json(classify(g)).dump() << '\n';
      return kExitOk;
    }

    if (*construct) {
      std::optional<Fixture> fix;
      Graph g = Graph::from_edge_list(1, {});
      if (!family_args.empty()) {
        FamilySpec spec{family_from_string(family_args.front()), {}};
        for (std::size_t i = 1; i < family_args.size(); ++i) {
          try {
            spec.params.push_back(std::stoi(family_args[i]));
          } catch (const std::exception&) {
            throw Error(Errc::BadParams, "family size \"" + family_args[i] + "\" is not an integer");
          }
        }
        g = build(spec);
      } else if (!fixture_name.empty()) {
        fix = fixture(fixture_name);
        g = fix->graph;
      } else if (!tree_args.empty()) {
        g = extremal_tree(tree_args[0], tree_args[1]);
      } else {
        err << "construct: pass one of --family, --fixture, --tree\n";
        return kExitUsage;
      }
      if (labels) {
        if (!fix) {
          err << "construct: --labels applies to --fixture only\n";
          return kExitUsage;
        }
        out << labels_json(*fix).dump() << '\n';
      } else if (out_format == "edgelist") {
        out << write_edge_list(g);
      } else {
        out << write_graph6(g) << '\n';
      }
      return kExitOk;
    }

    if (*bound) {
      TreeParams p(bound_args[0], bound_args[1]);
      Json j = {{"n", p.n()}, {"l", p.l()}, {"optimal", tree_bound_optimal(p)}, {"baseline", tree_bound_baseline(p)}};
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      const Law law = law_from_string(law_name);
      std::vector<LawVerdict> verdicts;
      if (law == Law::HypercubeTriameter) {
        verdicts.push_back(check_law(law, LawInput{std::nullopt, std::nullopt, dimension}));
      } else {
        auto graphs = load_graphs(verify_io, in);
        if (law == Law::CartesianAdditivity) {
          if (graphs.size() != 2) throw Error(Errc::PreconditionFailed, "cartesian_additivity needs exactly two input graphs");
          verdicts.push_back(check_law(law, LawInput{graphs[0], graphs[1], 0}));
        } else {
          for (auto& g : graphs) verdicts.push_back(check_law(law, LawInput{std::move(g), std::nullopt, 0}));
        }
      }
      int code = kExitOk;
      for (const auto& v : verdicts) {
        out << to_json(v).dump() << '\n';
        if (v.status == VerdictStatus::Violated) code = kExitViolation;
        if (v.status == VerdictStatus::PreconditionFailed) err << "verify: precondition failed: " << v.detail << '\n';
      }
      return code;
    }

    if (*scan) {
      ScanOptions options;
      options.class_filter = class_filter_from_string(class_name);
      if (!hypothesis_names.empty()) {
        options.hypotheses.clear();
        for (const auto& h : hypothesis_names) options.hypotheses.push_back(hypothesis_from_string(h));
      }
      options.workers = workers;

      std::unique_ptr<std::ofstream> file;
      std::ostream* sink_stream = &out;
      if (!jsonl_path.empty()) {
        file = std::make_unique<std::ofstream>(jsonl_path);
        if (!*file) throw Error(Errc::SourceParse, "cannot write " + jsonl_path);
        sink_stream = file.get();
      }
      auto sink = [&](const CounterexampleReport& r) { *sink_stream << to_json(r).dump() << '\n'; };

      ScanSummary summary;
      if (!scan_input.empty()) {
        InputOptions io{scan_input, "graph6"};
        auto graphs = load_graphs(io, in);
        summary = scan_graphs(graphs, options, sink);
      } else {
        if (max_n < 1) {
          err << "scan: pass --max-n or --input\n";
          return kExitUsage;
        }
        summary = scan_enumerated(min_n, max_n, options, sink);
      }
      *sink_stream << to_json(summary).dump() << '\n';
      err << "scanned " << summary.graphs_scanned << " graphs, " << summary.in_class << " in class "
          << to_string(options.class_filter) << ", " << summary.reports << " counterexample report(s)";
      if (summary.open_question_reports > 0) err << ", " << summary.open_question_reports << " bearing on open questions";
      err << '\n';
      if (!summary.all_verified) err << "scan: some reports failed independent re-verification\n";
      return summary.reports > 0 ? kExitViolation : kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace triameter::cli
