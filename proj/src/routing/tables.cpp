// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cassert>
#include <string>

#include "wmnroute/errors.hpp"
#include "wmnroute/routing.hpp"

namespace wmnroute {

TrailArena::Handle TrailArena::root(NodeId node) {
  entries_.push_back(Entry{node, 0, kNone});
  return static_cast<Handle>(entries_.size() - 1);
}

TrailArena::Handle TrailArena::extend(Handle prefix, NodeId node, ArcId arc) {
  assert(prefix >= 0 && static_cast<std::size_t>(prefix) < entries_.size());
  entries_.push_back(Entry{node, arc, prefix});
  return static_cast<Handle>(entries_.size() - 1);
}

Path TrailArena::materialize(const Graph& graph, Handle handle) const {
  if (handle == kNone) throw NoPath("no stored path");
  std::vector<ArcId> arcs;
  Handle at = handle;
  while (entries_.at(static_cast<std::size_t>(at)).prev != kNone) {
    const Entry& e = entries_[static_cast<std::size_t>(at)];
    // Handles only point backwards, so this walk always terminates.
    if (e.prev >= at) throw NoPath("trail is not acyclic");
    arcs.push_back(e.arc);
    at = e.prev;
  }
  Path path(entries_[static_cast<std::size_t>(at)].node);
  for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) path = path_concat(path, graph.arc(*it));
  return path;
}

RopeArena::Handle RopeArena::leaf(ArcId arc) {
  entries_.push_back(Entry{static_cast<std::int32_t>(arc), kNone});
  return static_cast<Handle>(entries_.size() - 1);
}

RopeArena::Handle RopeArena::concat(Handle left, Handle right) {
  if (left == kEmpty) return right;
  if (right == kEmpty) return left;
  entries_.push_back(Entry{left, right});
  return static_cast<Handle>(entries_.size() - 1);
}

std::vector<ArcId> RopeArena::arcs(Handle handle) const {
  std::vector<ArcId> out;
  if (handle == kEmpty) return out;
  if (handle == kNone) throw NoPath("no stored path");
  std::vector<Handle> stack{handle};
  while (!stack.empty()) {
    const Handle h = stack.back();
    stack.pop_back();
    const Entry& e = entries_.at(static_cast<std::size_t>(h));
    if (e.right == kNone) {
      out.push_back(static_cast<ArcId>(e.left));
    } else {
      stack.push_back(e.right);
      stack.push_back(e.left);
    }
  }
  return out;
}

Path extract_path(const Graph& graph, const LabelTable& table, NodeId source,
                  NodeId destination) {
  if (source != table.source) throw InvalidQuery("table was built for a different source");
  if (!graph.contains(destination) || index_of(destination) >= table.labels.size()) {
    throw InvalidQuery("destination out of range");
  }
  if (!table.reaches(destination)) throw NoPath("no feasible path to destination");
  return table.trails.materialize(graph, table.trail[index_of(destination)]);
}

Path extract_path(const Graph& graph, const AllPairsTable& table, NodeId source,
                  NodeId destination) {
  if (index_of(source) >= table.n || index_of(destination) >= table.n) {
    throw InvalidQuery("node out of range");
  }
  if (!table.reaches(source, destination)) throw NoPath("no feasible path");
  Path path(source);
  for (ArcId arc : table.ropes.arcs(table.route[table.at(source, destination)])) {
    path = path_concat(path, graph.arc(arc));
  }
  if (path.destination() != destination) throw NoPath("stored route ends elsewhere");
  return path;
}

RouteResult result_for(const Graph& graph, const LabelTable& table, NodeId destination) {
  if (!table.reaches(destination)) return RouteResult::infeasible();
  const Label& label = table.label(destination);
  return RouteResult::found(extract_path(graph, table, table.source, destination), label.rate,
                            label.delay);
}

RouteResult result_for(const Graph& graph, const AllPairsTable& table, NodeId source,
                       NodeId destination) {
  if (!table.reaches(source, destination)) return RouteResult::infeasible();
  // The table sums delays as (i, k) + (k, j); report the path's own
  // left-to-right sum, which can differ in the last bit.
  Path path = extract_path(graph, table, source, destination);
  const double rate = path.rate();
  const double delay = path.delay();
  if (!(delay <= table.bound)) return RouteResult::infeasible();
  return RouteResult::found(std::move(path), rate, delay);
}

std::string_view algorithm_name(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::kDijkstra:
      return "dijkstra";
    case Algorithm::kBellmanFord:
      return "bellman-ford";
    case Algorithm::kFloydWarshall:
      return "floyd-warshall";
    case Algorithm::kMra:
      return "mra";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "dijkstra") return Algorithm::kDijkstra;
  if (name == "bellman-ford" || name == "bf") return Algorithm::kBellmanFord;
  if (name == "floyd-warshall" || name == "fw") return Algorithm::kFloydWarshall;
  if (name == "mra") return Algorithm::kMra;
  return std::nullopt;
}

RouteResult route(Algorithm algorithm, const Graph& graph, const RouteQuery& query,
                  const RouteOptions& options) {
  check_query(graph, query);
  switch (algorithm) {
    case Algorithm::kDijkstra:
      return route_dijkstra(graph, query, options.isa);
    case Algorithm::kBellmanFord:
      return result_for(graph, route_bellman_ford(graph, query.source, query.bound),
                        query.destination);
    case Algorithm::kFloydWarshall:
      return result_for(graph, route_floyd_warshall(graph, query.bound, options.isa),
                        query.source, query.destination);
    case Algorithm::kMra:
      return route_mra(graph, query, options.mra);
  }
  throw InvalidQuery("unknown algorithm");
}

}  // namespace wmnroute
