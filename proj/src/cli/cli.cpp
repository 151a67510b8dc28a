// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wmnroute/bench.hpp"
#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/oracle.hpp"
#include "wmnroute/routing.hpp"

namespace wmnroute {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return parts;
    text.remove_prefix(pos + 1);
  }
}

double model_number(std::string_view text) {
  try {
    return parse_decimal(text);
  } catch (const Error&) {
    throw InvalidParams("bad number '" + std::string(text) + "' in model");
  }
}

}  // namespace

AttributeModel parse_model(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts[0] == "const" && parts.size() == 2) return ConstantModel{model_number(parts[1])};
  if (parts[0] == "uniform" && parts.size() == 3) {
    return UniformModel{model_number(parts[1]), model_number(parts[2])};
  }
  throw InvalidParams("model must be const:V or uniform:LO:HI, got '" + std::string(text) + "'");
}

std::string model_spec(const AttributeModel& model) {
  if (const auto* c = std::get_if<ConstantModel>(&model)) return "const:" + format_decimal(c->value);
  const auto& u = std::get<UniformModel>(model);
  return "uniform:" + format_decimal(u.lo) + ":" + format_decimal(u.hi);
}

namespace {

struct GenFlags {
  std::size_t n = 50;
  double area = 1000.0;
  double radius = 200.0;
  std::uint64_t seed = 1;
  std::string rate_model = "uniform:1:10";
  std::string delay_model = "const:2";
  std::string out;
};

struct RouteFlags {
  std::string in;
  std::string algo = "dijkstra";
  std::string src;
  std::string dst;
  double tau = 0.0;
  std::optional<double> tick;
  bool exact_delay = false;
  bool json = false;
  std::string isa = "auto";
};

struct CompareFlags {
  std::size_t trials = 500;
  std::optional<std::size_t> n;
  std::vector<double> taus{4, 6, 8, 10, 12, 14, 16, 18, 20};
  std::uint64_t seed = 1;
  double area = 1000.0;
  double radius = 500.0;
  std::string out;
  std::string cx_dir;
  std::string replay;
  std::string isa = "auto";
};

struct BenchFlags {
  std::vector<std::string> algos{"dijkstra", "bellman-ford", "floyd-warshall"};
  std::vector<std::size_t> sizes{50, 100, 200, 400};
  std::size_t reps = 5;
  double degree = 8.0;
  std::uint64_t seed = 1;
  std::string out;
  std::string isa = "auto";
};

struct ExportFlags {
  std::string in;
  std::string route;
  std::string out;
};

simd::Isa isa_flag(const std::string& name) {
  const auto isa = simd::parse_isa(name);
  if (!isa) throw InvalidParams("unknown isa '" + name + "'");
  return *isa;
}

Algorithm algorithm_flag(std::string_view name) {
  const auto algorithm = parse_algorithm(name);
  if (!algorithm) throw InvalidParams("unknown algorithm '" + std::string(name) + "'");
  return *algorithm;
}

std::string path_text(const Graph& graph, const Path& path) {
  std::string text;
  for (NodeId node : path.nodes()) {
    if (!text.empty()) text += ' ';
    text += graph.name(node);
  }
  return text;
}

int cmd_gen(const GenFlags& f, std::ostream& out) {
  TopologyParams params;
  params.node_count = f.n;
  params.area_side = f.area;
  params.radius = f.radius;
  params.seed = f.seed;
  params.rate_model = parse_model(f.rate_model);
  params.delay_model = parse_model(f.delay_model);
  check_params(params);
  const Graph graph = generate_topology(params);
  save_graph(f.out, graph, params);
  out << "nodes: " << graph.node_count() << "\n"
      << "links: " << graph.link_count() << "\n";
  return kExitOk;
}

int cmd_route(const RouteFlags& f, std::ostream& out, std::ostream& err) {
  const GraphFile file = load_graph(f.in);
  for (const auto& note : file.notes) err << "note: " << note << "\n";
  const Graph& graph = file.graph;
  const RouteQuery query{resolve_node(graph, f.src), resolve_node(graph, f.dst), f.tau};
  check_query(graph, query);

  RouteResult result;
  if (f.algo == "oracle") {
    result = threshold_exact_route(graph, query);
  } else if (f.algo == "brute-force") {
    result = brute_force_route(graph, query);
  } else {
    RouteOptions options;
    options.isa = isa_flag(f.isa);
    options.mra.tick = f.tick;
    options.mra.exact_delay = f.exact_delay;
    result = route(algorithm_flag(f.algo), graph, query, options);
  }

  if (f.json) {
    out << result_to_json(graph, result).dump(2) << "\n";
  } else if (result.is_found()) {
    out << "status: found\n"
        << "path: " << path_text(graph, *result.path) << "\n"
        << "rate_mbps: " << format_decimal(result.rate) << "\n"
        << "delay_ms: " << format_decimal(result.delay) << "\n";
  } else {
    out << "status: infeasible\n";
  }
  return result.is_found() ? kExitOk : kExitInfeasible;
}

int cmd_replay(const CompareFlags& f, std::ostream& out) {
  CompareOptions options;
  options.route.isa = isa_flag(f.isa);
  const bool same = replay_counterexample(f.replay, options);
  out << "replay: " << (same ? "identical" : "differs") << "\n";
  return same ? kExitOk : kExitFailure;
}

void print_summary(const AgreementSummary& s, std::ostream& os) {
  os << "instances: " << s.instances << "\n"
     << "oracle_conflicts: " << s.oracle_conflicts << "\n"
     << "violations: " << s.violations << "\n"
     << "counterexamples: " << s.counterexamples << "\n";
  for (std::size_t i = 0; i < kAllAlgorithms.size(); ++i) {
    os << algorithm_name(kAllAlgorithms[i]) << "_vs_oracle: " << s.oracle_matches[i] << "/"
       << s.oracle_checked[i] << "\n";
  }
  os << "dijkstra_vs_bellman-ford: " << s.pairwise_agree[0] << "/" << s.instances << "\n"
     << "dijkstra_vs_floyd-warshall: " << s.pairwise_agree[1] << "/" << s.instances << "\n"
     << "bellman-ford_vs_floyd-warshall: " << s.pairwise_agree[2] << "/" << s.instances << "\n"
     << "all_agree: " << s.all_agree << "/" << s.instances << "\n";
}

int cmd_compare(const CompareFlags& f, std::ostream& out, std::ostream& err) {
  if (!f.replay.empty()) return cmd_replay(f, out);
  CorpusSpec spec;
  spec.seed = f.seed;
  if (f.n) spec.min_nodes = spec.max_nodes = *f.n;
  spec.bounds = f.taus;
  spec.area_side = f.area;
  spec.radius = f.radius;

  CompareOptions options;
  options.route.isa = isa_flag(f.isa);
  options.counterexample_dir =
      f.cx_dir.empty() ? default_counterexample_dir() : std::filesystem::path(f.cx_dir);

  std::ostringstream csv;
  csv << agreement_csv_header() << "\n";
  AgreementSummary summary;
  for (std::size_t trial = 0; trial < f.trials; ++trial) {
    const Instance instance = sample_instance(spec, trial);
    check_params(instance.params);
    const Graph graph = generate_topology(instance.params);
    const AgreementReport report = compare_on_instance(graph, instance.query, options, instance.params);
    summary.add(report);
    csv << agreement_csv_row(graph, report) << "\n";
    if (report.counterexample_path) {
      err << "counterexample: " << report.counterexample_path->string() << "\n";
    }
  }
  if (f.out.empty()) {
    out << csv.str();
    print_summary(summary, err);
  } else {
    write_text_file(f.out, csv.str());
    print_summary(summary, out);
  }
  return kExitOk;
}

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  BenchParams params;
  params.repetitions = f.reps;
  params.degree = f.degree;
  params.seed = f.seed;
  params.isa = isa_flag(f.isa);
  std::vector<Algorithm> algorithms;
  for (const auto& name : f.algos) algorithms.push_back(algorithm_flag(name));

  std::ostringstream csv;
  csv << timing_csv_header() << "\n";
  for (Algorithm algorithm : algorithms) {
    const auto records = measure_runtime(algorithm, f.sizes, params);
    for (const auto& r : records) csv << timing_csv_row(r) << "\n";
    try {
      csv << slope_csv_row(fit_complexity_exponent(records)) << "\n";
    } catch (const InsufficientData& e) {
      err << "no slope for " << algorithm_name(algorithm) << ": " << e.what() << "\n";
    }
  }
  if (f.out.empty()) {
    out << csv.str();
  } else {
    write_text_file(f.out, csv.str());
  }
  return kExitOk;
}

int cmd_export(const ExportFlags& f, std::ostream& out) {
  const GraphFile file = load_graph(f.in);
  std::optional<Path> route;
  if (!f.route.empty()) {
    std::vector<NodeId> nodes;
    for (auto name : split(f.route, ',')) nodes.push_back(resolve_node(file.graph, name));
    route = Path::from_nodes(file.graph, nodes);
  }
  const std::string dot = export_dot(file.graph, route);
  if (f.out.empty()) {
    out << dot;
  } else {
    write_text_file(f.out, dot);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delay-bounded maximum-rate routing for wireless mesh networks", "wmnroute"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random geometric topology");
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--area", gen.area, "Side of the square area in meters");
  gen_cmd->add_option("--radius", gen.radius, "Coverage radius in meters");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--rate-model", gen.rate_model, "Link rate model (Mbps)");
  gen_cmd->add_option("--delay-model", gen.delay_model, "Link delay model (ms)");
  gen_cmd->add_option("--out", gen.out, "Output graph file")->required();

  RouteFlags rt;
  auto* route_cmd = app.add_subcommand("route", "Find a delay-bounded maximum-rate route");
  route_cmd->add_option("--in", rt.in, "Graph file")->required();
  route_cmd->add_option("--algo", rt.algo,
                        "dijkstra, bellman-ford, floyd-warshall, mra, oracle or brute-force");
  route_cmd->add_option("--src", rt.src, "Source node")->required();
  route_cmd->add_option("--dst", rt.dst, "Destination node")->required();
  route_cmd->add_option("--tau", rt.tau, "Delay bound in ms")->required();
  route_cmd->add_option("--tick", rt.tick, "MRA delay quantum in ms");
  route_cmd->add_flag("--exact-delay", rt.exact_delay, "MRA: require delay exactly tau");
  route_cmd->add_flag("--json", rt.json, "Machine-readable output");
  route_cmd->add_option("--isa", rt.isa, "auto, scalar or avx2");

  CompareFlags cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Check all algorithms against the oracles");
  compare_cmd->add_option("--trials", cmp.trials, "Number of instances")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--n", cmp.n, "Fixed node count (default 4..10)")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--tau", cmp.taus, "Delay bounds to sample from")->delimiter(',');
  compare_cmd->add_option("--seed", cmp.seed, "Corpus seed");
  compare_cmd->add_option("--area", cmp.area, "Side of the square area in meters");
  compare_cmd->add_option("--radius", cmp.radius, "Coverage radius in meters");
  compare_cmd->add_option("--out", cmp.out, "Output CSV (stdout when omitted)");
  compare_cmd->add_option("--cx-dir", cmp.cx_dir, "Counterexample directory");
  compare_cmd->add_option("--replay", cmp.replay, "Replay one counterexample bundle");
  compare_cmd->add_option("--isa", cmp.isa, "auto, scalar or avx2");

  BenchFlags bn;
  auto* bench_cmd = app.add_subcommand("bench", "Measure runtime and fit complexity exponents");
  bench_cmd->add_option("--algos", bn.algos, "Algorithms")->delimiter(',');
  bench_cmd->add_option("--sizes", bn.sizes, "Ascending node counts")->delimiter(',');
  bench_cmd->add_option("--reps", bn.reps, "Repetitions per size")->check(CLI::Range(5, 1000000));
  bench_cmd->add_option("--degree", bn.degree, "Expected node degree");
  bench_cmd->add_option("--seed", bn.seed, "Topology seed");
  bench_cmd->add_option("--out", bn.out, "Output CSV (stdout when omitted)");
  bench_cmd->add_option("--isa", bn.isa, "auto, scalar or avx2");

  ExportFlags ex;
  auto* export_cmd = app.add_subcommand("export", "Render a graph as Graphviz DOT");
  export_cmd->add_option("--in", ex.in, "Graph file")->required();
  export_cmd->add_option("--route", ex.route, "Comma-separated node sequence to highlight");
  export_cmd->add_option("--out", ex.out, "Output DOT file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*route_cmd) return cmd_route(rt, out, err);
    if (*compare_cmd) return cmd_compare(cmp, out, err);
    if (*bench_cmd) return cmd_bench(bn, out, err);
    if (*export_cmd) return cmd_export(ex, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wmnroute
