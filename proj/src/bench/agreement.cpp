// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <sstream>

#include "wmnroute/bench.hpp"
#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/rng.hpp"

namespace wmnroute {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view oracle_match_name(OracleMatch match) noexcept {
  switch (match) {
    case OracleMatch::kMatch:
      return "true";
    case OracleMatch::kMismatch:
      return "false";
    case OracleMatch::kUnchecked:
      return "unchecked";
  }
  return "unchecked";
}

const AlgorithmOutcome& AgreementReport::outcome(Algorithm algorithm) const {
  for (const auto& o : outcomes) {
    if (o.algorithm == algorithm) return o;
  }
  throw InvalidQuery("algorithm missing from report");
}

bool AgreementReport::has_violation() const noexcept {
  for (const auto& o : outcomes) {
    if (!o.violations.empty()) return true;
  }
  return !oracles_agree;
}

bool AgreementReport::needs_counterexample() const noexcept {
  if (!agree_rates || has_violation()) return true;
  for (const auto& o : outcomes) {
    if (o.matches_oracle == OracleMatch::kMismatch) return true;
  }
  return false;
}

namespace {

bool same_answer(const RouteResult& a, const RouteResult& b) {
  if (a.status != b.status) return false;
  return !a.is_found() || a.rate == b.rate;
}

std::vector<std::string> audit(const Graph& graph, const RouteQuery& query,
                               const RouteResult& result, const std::optional<RouteResult>& oracle) {
  std::vector<std::string> problems;
  if (!result.is_found()) return problems;
  if (!result.path) return {"found without a path"};
  const Path& path = *result.path;
  if (path.source() != query.source || path.destination() != query.destination) {
    problems.emplace_back("path endpoints differ from the query");
  }
  try {
    const double rate = path_rate(path, graph);
    const double delay = path_delay(path, graph);
    if (rate != result.rate) problems.emplace_back("reported rate differs from the path's bottleneck");
    if (delay != result.delay) problems.emplace_back("reported delay differs from the path's delay");
    if (!(delay <= query.bound)) problems.emplace_back("path delay exceeds the bound");
  } catch (const InvalidPath& e) {
    problems.emplace_back(std::string("path not in graph: ") + e.what());
  }
  if (!path.is_simple()) problems.emplace_back("path revisits a node");
  if (oracle) {
    if (!oracle->is_found()) {
      problems.emplace_back("found a path where the oracle proves none exists");
    } else if (result.rate > oracle->rate) {
      problems.emplace_back("rate exceeds the oracle optimum");
    }
  }
  return problems;
}

}  // namespace

AgreementReport compare_on_instance(const Graph& graph, const RouteQuery& query,
                                    const CompareOptions& options,
                                    const std::optional<TopologyParams>& params) {
  check_query(graph, query);
  AgreementReport report;
  report.params = params;
  report.query = query;

  try {
    report.brute_force = brute_force_route(graph, query, options.budget);
  } catch (const BudgetExceeded& e) {
    report.brute_force_skipped = e.what();
  }
  report.threshold_exact = threshold_exact_route(graph, query);
  if (report.brute_force) {
    report.oracle_used = "brute-force";
    report.oracles_agree = same_answer(*report.brute_force, *report.threshold_exact);
  } else {
    report.oracle_used = "threshold-exact";
  }
  const std::optional<RouteResult>& oracle = report.oracle();

  for (Algorithm algorithm : kAllAlgorithms) {
    AlgorithmOutcome outcome;
    outcome.algorithm = algorithm;
    try {
      outcome.result = route(algorithm, graph, query, options.route);
    } catch (const QuantizationError& e) {
      outcome.skipped_reason = e.what();
    } catch (const Error& e) {
      // Any other error counts as a defect.
      outcome.violations.push_back(std::string("algorithm failed: ") + e.what());
    }
    if (outcome.result) {
      outcome.violations = audit(graph, query, *outcome.result, oracle);
      if (oracle) {
        outcome.matches_oracle =
            same_answer(*outcome.result, *oracle) ? OracleMatch::kMatch : OracleMatch::kMismatch;
      }
    }
    report.outcomes.push_back(std::move(outcome));
  }

  const RouteResult* first = nullptr;
  for (const auto& o : report.outcomes) {
    if (!o.result) continue;
    if (!first) {
      first = &*o.result;
    } else if (!same_answer(*first, *o.result)) {
      report.agree_rates = false;
    }
  }

  if (options.counterexample_dir && report.needs_counterexample()) {
    report.counterexample_path = write_counterexample(*options.counterexample_dir, graph, report);
  }
  return report;
}

ordered_json report_to_json(const Graph& graph, const AgreementReport& report) {
  auto result_json = [&](const std::optional<RouteResult>& r, const std::string& reason) {
    if (r) return result_to_json(graph, *r);
    return ordered_json{{"status", "skipped"}, {"reason", reason}};
  };
  ordered_json instance{{"generator", report.params ? params_to_json(*report.params) : ordered_json()},
                        {"query", query_to_json(graph, report.query)}};
  ordered_json oracle{{"used", report.oracle_used},
                      {"brute_force", result_json(report.brute_force, report.brute_force_skipped)},
                      {"threshold_exact", result_json(report.threshold_exact, "")},
                      {"agree", report.oracles_agree}};
  ordered_json algorithms = ordered_json::array();
  for (const auto& o : report.outcomes) {
    algorithms.push_back(ordered_json{{"name", algorithm_name(o.algorithm)},
                                      {"result", result_json(o.result, o.skipped_reason)},
                                      {"matches_oracle", oracle_match_name(o.matches_oracle)},
                                      {"violations", o.violations}});
  }
  return ordered_json{{"instance", std::move(instance)},
                      {"oracle", std::move(oracle)},
                      {"algorithms", std::move(algorithms)},
                      {"agree_rates", report.agree_rates}};
}

std::filesystem::path write_counterexample(const std::filesystem::path& dir, const Graph& graph,
                                           const AgreementReport& report) {
  std::ostringstream name;
  name << "cx-" << (report.params ? std::to_string(report.params->seed) : std::string("graph"))
       << "-" << graph.name(report.query.source) << "-" << graph.name(report.query.destination)
       << "-" << format_decimal(report.query.bound);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::filesystem::path bundle = dir / name.str();
  for (int k = 2; std::filesystem::exists(bundle); ++k) {
    bundle = dir / (name.str() + "-" + std::to_string(k));
  }
  std::filesystem::create_directory(bundle, ec);
  if (ec) throw IoError("cannot create " + bundle.string() + ": " + ec.message());
  save_graph(bundle / "graph.json", graph, report.params);
  write_text_file(bundle / "query.json", query_to_json(graph, report.query).dump(2) + "\n");
  write_text_file(bundle / "results.json", report_to_json(graph, report).dump(2) + "\n");
  return bundle;
}

CounterexampleBundle load_counterexample(const std::filesystem::path& bundle_dir) {
  CounterexampleBundle bundle{load_graph(bundle_dir / "graph.json"), RouteQuery{}, json()};
  try {
    bundle.query = query_from_json(bundle.graph.graph,
                                   json::parse(read_text_file(bundle_dir / "query.json")));
    bundle.results = json::parse(read_text_file(bundle_dir / "results.json"));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed bundle: ") + e.what());
  }
  return bundle;
}

bool replay_counterexample(const std::filesystem::path& bundle_dir, const CompareOptions& options) {
  const CounterexampleBundle bundle = load_counterexample(bundle_dir);
  CompareOptions replay = options;
  replay.counterexample_dir.reset();
  const AgreementReport report =
      compare_on_instance(bundle.graph.graph, bundle.query, replay, bundle.graph.generator);
  return json::parse(report_to_json(bundle.graph.graph, report).dump()) == bundle.results;
}

std::filesystem::path default_counterexample_dir() {
  if (const char* env = std::getenv(kCounterexampleDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return "counterexamples";
}

Instance sample_instance(const CorpusSpec& spec, std::size_t trial) {
  if (spec.min_nodes < 1 || spec.max_nodes < spec.min_nodes) {
    throw InvalidParams("corpus node range is empty");
  }
  if (spec.bounds.empty()) throw InvalidParams("corpus needs at least one delay bound");
  const std::uint64_t seed = derive_seed(spec.seed, trial);
  Xoshiro256 rng(seed);
  Instance instance;
  TopologyParams& p = instance.params;
  p.node_count = spec.min_nodes + rng.below(spec.max_nodes - spec.min_nodes + 1);
  p.area_side = spec.area_side;
  p.radius = spec.radius;
  p.seed = derive_seed(seed, 1);
  p.rate_model = spec.rate_model;
  p.delay_model = spec.delay_model;
  const std::size_t n = p.node_count;
  const std::size_t src = rng.below(n);
  std::size_t dst = src;
  if (n > 1) {
    dst = rng.below(n - 1);
    if (dst >= src) ++dst;
  }
  instance.query = RouteQuery{node_id(src), node_id(dst), spec.bounds[rng.below(spec.bounds.size())]};
  return instance;
}

void AgreementSummary::add(const AgreementReport& report) {
  ++instances;
  if (report.counterexample_path || report.needs_counterexample()) ++counterexamples;
  if (report.has_violation()) ++violations;
  if (!report.oracles_agree) ++oracle_conflicts;
  for (std::size_t i = 0; i < report.outcomes.size() && i < 4; ++i) {
    const auto match = report.outcomes[i].matches_oracle;
    if (match == OracleMatch::kUnchecked) continue;
    ++oracle_checked[i];
    if (match == OracleMatch::kMatch) ++oracle_matches[i];
  }
  auto agree = [&](Algorithm a, Algorithm b) {
    const auto& x = report.outcome(a).result;
    const auto& y = report.outcome(b).result;
    return x && y && same_answer(*x, *y);
  };
  const bool db = agree(Algorithm::kDijkstra, Algorithm::kBellmanFord);
  const bool df = agree(Algorithm::kDijkstra, Algorithm::kFloydWarshall);
  const bool bf = agree(Algorithm::kBellmanFord, Algorithm::kFloydWarshall);
  pairwise_agree[0] += db;
  pairwise_agree[1] += df;
  pairwise_agree[2] += bf;
  all_agree += report.agree_rates;
}

std::string agreement_csv_header() {
  return "seed,n,L,src,dst,tau,dijkstra,bellman_ford,floyd_warshall,mra,oracle,agree,"
         "matches_oracle";
}

namespace {

std::string rate_cell(const std::optional<RouteResult>& r) {
  if (!r) return "skipped";
  if (!r->is_found()) return "infeasible";
  return format_decimal(r->rate);
}

}  // namespace

std::string agreement_csv_row(const Graph& graph, const AgreementReport& report) {
  std::ostringstream row;
  row << (report.params ? std::to_string(report.params->seed) : std::string()) << ','
      << graph.node_count() << ',' << graph.link_count() << ',' << graph.name(report.query.source)
      << ',' << graph.name(report.query.destination) << ',' << format_decimal(report.query.bound);
  for (const auto& o : report.outcomes) row << ',' << rate_cell(o.result);
  row << ',' << rate_cell(report.oracle()) << ',' << (report.agree_rates ? "true" : "false");
  bool any_checked = false;
  bool all_match = true;
  for (const auto& o : report.outcomes) {
    if (o.matches_oracle == OracleMatch::kUnchecked) continue;
    any_checked = true;
    all_match = all_match && o.matches_oracle == OracleMatch::kMatch;
  }
  row << ',' << (!any_checked ? "unchecked" : (all_match ? "true" : "false"));
  return row.str();
}

}  // namespace wmnroute
