// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "labels.hpp"

#include "wmnroute/errors.hpp"

namespace wmnroute::detail {

LabelTable initial_labels(const Graph& graph, NodeId source, double bound) {
  if (!graph.contains(source)) throw InvalidQuery("source out of range");
  if (!(bound >= 0.0)) throw InvalidQuery("delay bound must be nonnegative");
  LabelTable table;
  table.source = source;
  table.bound = bound;
  table.labels.assign(graph.node_count(), Label{});
  table.trail.assign(graph.node_count(), TrailArena::kNone);
  Label& origin = table.labels[index_of(source)];
  origin.rate = kInfiniteRate;
  origin.delay = 0.0;
  table.trail[index_of(source)] = table.trails.root(source);
  return table;
}

bool relax(const Graph& graph, LabelTable& table, ArcId arc_id) {
  const Link& arc = graph.arc(arc_id);
  const std::size_t u = index_of(arc.from);
  const std::size_t v = index_of(arc.to);
  Label& from = table.labels[u];
  Label& to = table.labels[v];
  if (arc.delay + from.delay <= table.bound) {
    const double cap = arc.rate < from.rate ? arc.rate : from.rate;
    if (cap > to.rate || to.delay > table.bound) {
      to.rate = cap;
      to.parent = arc.from;
      to.delay = from.delay + arc.delay;
      // v's path is a copy of u's current path plus this arc.
      table.trail[v] = table.trails.extend(table.trail[u], arc.to, arc_id);
      return true;
    }
  } else if (to.delay > table.bound) {
    to.rate = 0.0;
    to.delay = kUnreachable;
    to.parent.reset();
    table.trail[v] = TrailArena::kNone;
    return true;
  }
  return false;
}

}  // namespace wmnroute::detail
