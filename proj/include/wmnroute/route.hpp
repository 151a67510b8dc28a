// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "wmnroute/graph.hpp"

namespace wmnroute {

/// Source, destination and end-to-end delay bound (ms).
struct RouteQuery {
  NodeId source{};
  NodeId destination{};
  double bound = 0.0;
};

/// Throws InvalidQuery on out-of-range endpoints or a negative/NaN bound.
void check_query(const Graph& graph, const RouteQuery& query);

enum class RouteStatus { kFound, kInfeasible };

struct RouteResult {
  RouteStatus status = RouteStatus::kInfeasible;
  std::optional<Path> path;
  double rate = 0.0;
  double delay = kUnreachable;

  static RouteResult found(Path path, double rate, double delay) {
    return RouteResult{RouteStatus::kFound, std::move(path), rate, delay};
  }
  static RouteResult infeasible() { return RouteResult{}; }

  bool is_found() const noexcept { return status == RouteStatus::kFound; }

  friend bool operator==(const RouteResult&, const RouteResult&) = default;
};

}  // namespace wmnroute
