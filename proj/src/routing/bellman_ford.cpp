// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "labels.hpp"

namespace wmnroute {

LabelTable route_bellman_ford(const Graph& graph, NodeId source, double bound) {
  LabelTable table = detail::initial_labels(graph, source, bound);
  const std::size_t n = graph.node_count();
  const auto arc_count = static_cast<ArcId>(graph.arc_count());
  // Always n-1 full rounds, even after the labels settle.
  for (std::size_t round = 1; round < n; ++round) {
    for (ArcId arc = 0; arc < arc_count; ++arc) detail::relax(graph, table, arc);
  }
  return table;
}

}  // namespace wmnroute
