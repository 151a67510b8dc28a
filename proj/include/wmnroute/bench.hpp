// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmnroute/graph.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/oracle.hpp"
#include "wmnroute/route.hpp"
#include "wmnroute/routing.hpp"
#include "wmnroute/topology.hpp"

namespace wmnroute {

// ---------------------------------------------------------------------------
// Agreement harness

enum class OracleMatch { kMatch, kMismatch, kUnchecked };

std::string_view oracle_match_name(OracleMatch match) noexcept;

struct AlgorithmOutcome {
  Algorithm algorithm = Algorithm::kDijkstra;
  /// Empty when the algorithm could not run (e.g. MRA on an off-grid instance).
  std::optional<RouteResult> result;
  std::string skipped_reason;
  OracleMatch matches_oracle = OracleMatch::kUnchecked;
  /// Broken feasibility, bottleneck or simplicity contract, or a rate above
  /// the oracle. Empty when the result is sound.
  std::vector<std::string> violations;
};

struct AgreementReport {
  std::optional<TopologyParams> params;
  RouteQuery query;
  std::vector<AlgorithmOutcome> outcomes;

  std::optional<RouteResult> brute_force;
  std::string brute_force_skipped;
  std::optional<RouteResult> threshold_exact;
  /// "brute-force", "threshold-exact" or "none".
  std::string oracle_used = "none";
  bool oracles_agree = true;

  bool agree_rates = true;
  std::optional<std::filesystem::path> counterexample_path;

  const std::optional<RouteResult>& oracle() const noexcept {
    return brute_force ? brute_force : threshold_exact;
  }
  const AlgorithmOutcome& outcome(Algorithm algorithm) const;
  bool has_violation() const noexcept;
  /// Any disagreement, oracle mismatch or violation.
  bool needs_counterexample() const noexcept;
};

struct CompareOptions {
  RouteOptions route;
  BruteForceBudget budget;
  /// Bundles are written here on any mismatch; nothing is written when unset.
  std::optional<std::filesystem::path> counterexample_dir;
};

/// Runs all four algorithms and both oracles on one instance. The brute
/// force is the reference when it completes, else the threshold oracle.
AgreementReport compare_on_instance(const Graph& graph, const RouteQuery& query,
                                    const CompareOptions& options = {},
                                    const std::optional<TopologyParams>& params = {});

/// Report as JSON, excluding the counterexample location.
nlohmann::ordered_json report_to_json(const Graph& graph, const AgreementReport& report);

/// Writes graph.json, query.json and results.json into a fresh directory
/// under `dir`; returns that directory.
std::filesystem::path write_counterexample(const std::filesystem::path& dir, const Graph& graph,
                                           const AgreementReport& report);

struct CounterexampleBundle {
  GraphFile graph;
  RouteQuery query;
  nlohmann::json results;
};

CounterexampleBundle load_counterexample(const std::filesystem::path& bundle_dir);

/// Re-runs a bundle; true when the fresh report serializes identically.
bool replay_counterexample(const std::filesystem::path& bundle_dir,
                           const CompareOptions& options = {});

/// Environment override for the counterexample directory.
inline constexpr const char* kCounterexampleDirEnv = "WMNROUTE_COUNTEREXAMPLE_DIR";
std::filesystem::path default_counterexample_dir();

// ---------------------------------------------------------------------------
// Seeded random corpora

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t min_nodes = 4;
  std::size_t max_nodes = 10;
  std::vector<double> bounds{4, 6, 8, 10, 12, 14, 16, 18, 20};
  double area_side = 1000.0;
  double radius = 500.0;
  AttributeModel rate_model = UniformModel{1.0, 10.0};
  AttributeModel delay_model = ConstantModel{2.0};
};

struct Instance {
  TopologyParams params;
  RouteQuery query;
};

/// Deterministic in (spec, trial). Source and destination differ when n > 1.
Instance sample_instance(const CorpusSpec& spec, std::size_t trial);

struct AgreementSummary {
  std::size_t instances = 0;
  std::size_t counterexamples = 0;
  std::size_t violations = 0;
  std::size_t oracle_conflicts = 0;
  /// Per algorithm in kAllAlgorithms order.
  std::array<std::size_t, 4> oracle_matches{};
  std::array<std::size_t, 4> oracle_checked{};
  /// Dijkstra/Bellman-Ford, Dijkstra/Floyd-Warshall, Bellman-Ford/Floyd-Warshall.
  std::array<std::size_t, 3> pairwise_agree{};
  std::size_t all_agree = 0;

  void add(const AgreementReport& report);
};

/// CSV header and row for the compare command.
std::string agreement_csv_header();
std::string agreement_csv_row(const Graph& graph, const AgreementReport& report);

// ---------------------------------------------------------------------------
// Runtime measurement

struct TimingRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t links = 0;
  std::size_t repetitions = 0;
  double median_ms = 0.0;
  /// max - min over the repetitions.
  double spread_ms = 0.0;
};

struct BenchParams {
  double area_side = 1000.0;
  /// Expected node degree; the radius shrinks with n to hold it fixed.
  double degree = 8.0;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
  double bound = 50.0;
  /// Each repetition repeats the call until at least this much time passes.
  double min_batch_ms = 2.0;
  simd::Isa isa = simd::Isa::kAuto;
};

/// Times `fn` (after one discarded warm-up) and returns the median of
/// `repetitions` batches, each normalized per call. Throws InvalidParams
/// for fewer than 5 repetitions.
TimingRecord time_callable(std::string name, std::size_t n, std::size_t links,
                           const std::function<void()>& fn, std::size_t repetitions,
                           double min_batch_ms);

/// Builds the fixed-density graph for size n used by measure_runtime.
Graph bench_graph(std::size_t n, const BenchParams& params);

/// One record per size, graphs generated outside the timed region.
std::vector<TimingRecord> measure_runtime(Algorithm algorithm, std::span<const std::size_t> sizes,
                                          const BenchParams& params = {});

struct ExponentFit {
  std::string algorithm;
  double slope = 0.0;
  double residual = 0.0;
  std::size_t sizes = 0;
};

/// Least-squares slope of log(median) against log(n). Needs at least 4
/// distinct sizes spanning 8x; throws InsufficientData otherwise.
ExponentFit fit_complexity_exponent(std::span<const TimingRecord> records);

std::string timing_csv_header();
std::string timing_csv_row(const TimingRecord& record);
std::string slope_csv_row(const ExponentFit& fit);

}  // namespace wmnroute
