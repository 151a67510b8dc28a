// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/route.hpp"

#include <cmath>
#include <string>

#include "wmnroute/errors.hpp"

namespace wmnroute {

void check_query(const Graph& graph, const RouteQuery& query) {
  if (!graph.contains(query.source)) {
    throw InvalidQuery("source " + std::to_string(index_of(query.source)) + " out of range");
  }
  if (!graph.contains(query.destination)) {
    throw InvalidQuery("destination " + std::to_string(index_of(query.destination)) +
                       " out of range");
  }
  if (std::isnan(query.bound) || query.bound < 0.0) {
    throw InvalidQuery("delay bound must be nonnegative");
  }
}

}  // namespace wmnroute
