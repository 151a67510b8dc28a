// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wmnroute/errors.hpp"
#include "wmnroute/routing.hpp"

namespace wmnroute {
namespace {

constexpr double kGridTolerance = 1e-9;
constexpr std::int64_t kMaxDenominator = 1000;
constexpr std::int64_t kMaxCommonDenominator = 1'000'000;
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 27;

bool near_integer(double x) {
  return std::abs(x - std::round(x)) <= kGridTolerance * std::max(1.0, std::abs(x));
}

std::optional<std::int64_t> denominator_of(double value) {
  for (std::int64_t q = 1; q <= kMaxDenominator; ++q) {
    if (near_integer(value * static_cast<double>(q))) return q;
  }
  return std::nullopt;
}

std::uint32_t to_ticks(double delay, double tick, const char* what) {
  const double ticks = delay / tick;
  if (!near_integer(ticks)) {
    throw QuantizationError(std::string(what) + " " + std::to_string(delay) +
                            " ms is not a multiple of the " + std::to_string(tick) + " ms tick");
  }
  return static_cast<std::uint32_t>(std::llround(ticks));
}

}  // namespace

double default_mra_tick(const Graph& graph, double bound) {
  std::vector<double> values;
  for (const Link& arc : graph.arcs()) {
    if (arc.delay > 0.0) values.push_back(arc.delay);
  }
  if (bound > 0.0 && std::isfinite(bound)) values.push_back(bound);
  if (values.empty()) return 1.0;

  std::int64_t common = 1;
  for (double v : values) {
    const auto q = denominator_of(v);
    if (!q) return 1.0;
    common = std::lcm(common, *q);
    if (common > kMaxCommonDenominator) return 1.0;
  }
  std::int64_t g = 0;
  for (double v : values) {
    const double scaled = v * static_cast<double>(common);
    if (scaled > 9e15) return 1.0;
    g = std::gcd(g, std::llround(scaled));
  }
  if (g == 0) return 1.0;
  return static_cast<double>(g) / static_cast<double>(common);
}

MraTable build_mra_table(const Graph& graph, NodeId destination, double bound, double tick) {
  if (!graph.contains(destination)) throw InvalidQuery("destination out of range");
  if (!(tick > 0.0) || !std::isfinite(tick)) throw QuantizationError("tick must be positive");
  if (!(bound >= 0.0) || !std::isfinite(bound)) {
    throw QuantizationError("delay bound must be finite for the delay grid");
  }

  MraTable t;
  t.destination = destination;
  t.tick = tick;
  t.n = graph.node_count();
  // Paths only take delays on the grid, so a bound between grid points
  // rounds down.
  t.bound_ticks = static_cast<std::size_t>(std::floor(bound / tick + kGridTolerance));
  const std::size_t layers = t.bound_ticks + 1;
  if (t.n * layers > kMaxTableEntries) throw QuantizationError("delay grid too fine");

  t.arc_ticks.reserve(graph.arc_count());
  for (const Link& arc : graph.arcs()) {
    const std::uint32_t ticks = to_ticks(arc.delay, tick, "link delay");
    if (ticks == 0) throw QuantizationError("zero-delay links have no place on the delay grid");
    t.arc_ticks.push_back(ticks);
  }
  t.entries.assign(t.n * layers, MraTable::Entry{});

  const std::size_t w = index_of(destination);
  for (std::size_t d = 1; d < layers; ++d) {
    for (std::size_t u = 0; u < t.n; ++u) {
      if (u == w) continue;
      MraTable::Entry& entry = t.entries[u * layers + d];
      const auto out = graph.out_arcs(node_id(u));
      // A single link straight into the destination with delay exactly d.
      for (ArcId a : out) {
        if (index_of(graph.arc(a).to) == w && t.arc_ticks[a] == d) {
          entry = MraTable::Entry{graph.arc(a).rate, static_cast<std::int32_t>(a)};
        }
      }
      // Extend the best v walk of delay d - t(l) by each out-link l = (u, v).
      for (ArcId a : out) {
        const Link& arc = graph.arc(a);
        const std::size_t v = index_of(arc.to);
        if (v == w || t.arc_ticks[a] >= d) continue;
        const MraTable::Entry& rest = t.entries[v * layers + (d - t.arc_ticks[a])];
        if (rest.arc < 0) continue;
        const double cap = arc.rate < rest.rate ? arc.rate : rest.rate;
        if (entry.arc < 0 || entry.rate < cap) {
          entry = MraTable::Entry{cap, static_cast<std::int32_t>(a)};
        }
      }
    }
  }
  return t;
}

Path extract_path(const Graph& graph, const MraTable& table, NodeId source, std::size_t ticks) {
  if (index_of(source) >= table.n) throw InvalidQuery("source out of range");
  if (ticks > table.bound_ticks) throw InvalidQuery("delay index beyond the table");
  std::vector<NodeId> walk{source};
  std::size_t u = index_of(source);
  std::size_t d = ticks;
  while (u != index_of(table.destination)) {
    const MraTable::Entry& e = table.entries[u * (table.bound_ticks + 1) + d];
    if (e.arc < 0) throw NoPath("no walk of that delay");
    const auto a = static_cast<ArcId>(e.arc);
    if (table.arc_ticks[a] > d) throw NoPath("corrupt delay table");
    d -= table.arc_ticks[a];
    u = index_of(graph.arc(a).to);
    walk.push_back(graph.arc(a).to);
  }
  // Chronological loop erasure.
  std::vector<NodeId> simple;
  std::vector<std::int64_t> position(table.n, -1);
  for (NodeId node : walk) {
    const std::int64_t seen = position[index_of(node)];
    if (seen >= 0) {
      for (std::size_t k = static_cast<std::size_t>(seen) + 1; k < simple.size(); ++k) {
        position[index_of(simple[k])] = -1;
      }
      simple.resize(static_cast<std::size_t>(seen) + 1);
      continue;
    }
    position[index_of(node)] = static_cast<std::int64_t>(simple.size());
    simple.push_back(node);
  }
  return Path::from_nodes(graph, simple);
}

RouteResult route_mra(const Graph& graph, const RouteQuery& query, const MraOptions& options) {
  check_query(graph, query);
  const double tick = options.tick ? *options.tick : default_mra_tick(graph, query.bound);
  const MraTable table = build_mra_table(graph, query.destination, query.bound, tick);
  if (query.source == query.destination) {
    if (options.exact_delay && table.bound_ticks != 0) return RouteResult::infeasible();
    return RouteResult::found(Path(query.source), kInfiniteRate, 0.0);
  }

  // Best over every delay d <= bound; the smallest d wins ties. In exact
  // mode only d == bound is eligible.
  std::optional<std::size_t> best;
  double best_rate = 0.0;
  const std::size_t first = options.exact_delay ? table.bound_ticks : 1;
  for (std::size_t d = first; d <= table.bound_ticks; ++d) {
    const MraTable::Entry& e = table.entry(query.source, d);
    if (e.arc >= 0 && (!best || e.rate > best_rate)) {
      best = d;
      best_rate = e.rate;
    }
  }
  if (!best) return RouteResult::infeasible();

  // Loop erasure can change rate and delay; report the returned path's own.
  Path path = extract_path(graph, table, query.source, *best);
  const double rate = path.rate();
  const double delay = path.delay();
  return RouteResult::found(std::move(path), rate, delay);
}

}  // namespace wmnroute
