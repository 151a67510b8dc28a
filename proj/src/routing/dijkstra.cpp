// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "labels.hpp"

namespace wmnroute {

LabelTable dijkstra_labels(const Graph& graph, NodeId source, double bound, simd::Isa isa) {
  LabelTable table = detail::initial_labels(graph, source, bound);
  const simd::Kernels& k = simd::kernels(isa);
  const std::size_t n = graph.node_count();

  // Selection key: the label rate while unvisited, -1 once visited.
  std::vector<double> key(n, 0.0);
  key[index_of(source)] = kInfiniteRate;

  for (std::size_t round = 1; round < n; ++round) {
    const std::size_t u = k.argmax_first(key.data(), n);
    table.labels[u].visited = true;
    key[u] = -1.0;
    for (ArcId arc : graph.out_arcs(node_id(u))) {
      if (detail::relax(graph, table, arc)) {
        const std::size_t v = index_of(graph.arc(arc).to);
        if (!table.labels[v].visited) key[v] = table.labels[v].rate;
      }
    }
  }
  return table;
}

RouteResult route_dijkstra(const Graph& graph, const RouteQuery& query, simd::Isa isa) {
  check_query(graph, query);
  return result_for(graph, dijkstra_labels(graph, query.source, query.bound, isa),
                    query.destination);
}

}  // namespace wmnroute
