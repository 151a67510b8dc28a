// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "wmnroute/graph.hpp"
#include "wmnroute/route.hpp"

namespace wmnroute {

/// Six-node example network u, a, w, b, x, y (ids 0..5 in that order),
/// every link 2 ms: u-a 5, a-w 7, w-y 6, u-b 9, b-x 8, x-y 3 Mbps.
/// The best u -> y path under a 6 ms bound is u-a-w-y at 5 Mbps.
Graph canonical_graph();

struct BruteForceBudget {
  std::size_t max_nodes = 14;
  std::uint64_t max_expansions = 10'000'000;
};

/// Enumerates every simple source -> destination path with delay <= bound.
/// Ties on rate go to lower delay, then fewer hops, then the
/// lexicographically smallest node sequence. Throws BudgetExceeded.
RouteResult brute_force_route(const Graph& graph, const RouteQuery& query,
                              const BruteForceBudget& budget = {});

/// Exact by decomposition: the answer is the largest link rate r for which
/// the subgraph of links with rate >= r has a min-delay path within the
/// bound (binary search, feasibility is monotone in r). Returns that
/// min-delay path.
RouteResult threshold_exact_route(const Graph& graph, const RouteQuery& query);

/// Minimum delay from source to destination using only links of rate >=
/// `min_rate`, or +inf.
double min_delay_at_rate(const Graph& graph, NodeId source, NodeId destination, double min_rate);

}  // namespace wmnroute
