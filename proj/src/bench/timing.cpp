// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "wmnroute/bench.hpp"
#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/rng.hpp"

namespace wmnroute {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

TimingRecord time_callable(std::string name, std::size_t n, std::size_t links,
                           const std::function<void()>& fn, std::size_t repetitions,
                           double min_batch_ms) {
  if (repetitions < 5) throw InvalidParams("at least 5 repetitions are required");
  fn();

  // Batch size from one timed call.
  const auto probe = Clock::now();
  fn();
  const double single = std::max(elapsed_ms(probe), 1e-6);
  const std::size_t batch =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(min_batch_ms / single)));

  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    const auto start = Clock::now();
    for (std::size_t b = 0; b < batch; ++b) fn();
    samples.push_back(elapsed_ms(start) / static_cast<double>(batch));
  }
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  TimingRecord record;
  record.algorithm = std::move(name);
  record.n = n;
  record.links = links;
  record.repetitions = repetitions;
  record.spread_ms = *hi - *lo;
  record.median_ms = median_of(std::move(samples));
  return record;
}

Graph bench_graph(std::size_t n, const BenchParams& params) {
  TopologyParams p;
  p.node_count = n;
  p.area_side = params.area_side;
  p.radius = radius_for_degree(n, params.area_side, params.degree);
  p.seed = derive_seed(params.seed, n);
  return generate_topology(p);
}

std::vector<TimingRecord> measure_runtime(Algorithm algorithm, std::span<const std::size_t> sizes,
                                          const BenchParams& params) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw InvalidParams("sizes must be ascending");
  std::vector<TimingRecord> records;
  for (std::size_t n : sizes) {
    if (n < 2) throw InvalidParams("benchmark sizes must be at least 2");
    const Graph graph = bench_graph(n, params);
    const RouteQuery query{node_id(0), node_id(n - 1), params.bound};
    std::function<void()> fn;
    switch (algorithm) {
      case Algorithm::kDijkstra:
        fn = [&] { (void)dijkstra_labels(graph, query.source, query.bound, params.isa); };
        break;
      case Algorithm::kBellmanFord:
        fn = [&] { (void)route_bellman_ford(graph, query.source, query.bound); };
        break;
      case Algorithm::kFloydWarshall:
        fn = [&] { (void)route_floyd_warshall(graph, query.bound, params.isa); };
        break;
      case Algorithm::kMra:
        fn = [&] { (void)route_mra(graph, query); };
        break;
    }
    records.push_back(time_callable(std::string(algorithm_name(algorithm)), n, graph.link_count(),
                                    fn, params.repetitions, params.min_batch_ms));
  }
  return records;
}

ExponentFit fit_complexity_exponent(std::span<const TimingRecord> records) {
  std::vector<std::size_t> sizes;
  for (const auto& r : records) sizes.push_back(r.n);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.size() < 4) throw InsufficientData("fit needs at least 4 distinct sizes");
  if (sizes.front() == 0 || sizes.back() < 8 * sizes.front()) {
    throw InsufficientData("fit needs sizes spanning at least 8x");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : records) {
    if (!(r.median_ms > 0)) throw InsufficientData("fit needs positive timings");
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.median_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(records.size());
  ExponentFit fit;
  fit.algorithm = records.front().algorithm;
  fit.sizes = sizes.size();
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - fit.slope * sx) / m;
  double ss = 0;
  for (const auto& r : records) {
    const double e =
        std::log(r.median_ms) - (intercept + fit.slope * std::log(static_cast<double>(r.n)));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

std::string timing_csv_header() { return "algo,n,L,reps,median_ms,slope"; }

std::string timing_csv_row(const TimingRecord& record) {
  std::ostringstream row;
  row << record.algorithm << ',' << record.n << ',' << record.links << ',' << record.repetitions
      << ',' << format_decimal(record.median_ms) << ',';
  return row.str();
}

std::string slope_csv_row(const ExponentFit& fit) {
  return fit.algorithm + ",,,,," + format_decimal(fit.slope);
}

}  // namespace wmnroute
