// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "wmnroute/errors.hpp"

namespace wmnroute {

Graph canonical_graph() {
  enum : std::uint32_t { u, a, w, b, x, y };
  const Link links[] = {
      {node_id(u), node_id(a), 5.0, 2.0}, {node_id(a), node_id(w), 7.0, 2.0},
      {node_id(w), node_id(y), 6.0, 2.0}, {node_id(u), node_id(b), 9.0, 2.0},
      {node_id(b), node_id(x), 8.0, 2.0}, {node_id(x), node_id(y), 3.0, 2.0},
  };
  return make_graph(6, links, Directedness::kUndirected, {}, {"u", "a", "w", "b", "x", "y"});
}

namespace {

struct Search {
  Search(const Graph& g, NodeId dst, double b, std::uint64_t limit)
      : graph(g), destination(dst), bound(b), budget(limit) {}

  const Graph& graph;
  NodeId destination;
  double bound;
  std::uint64_t budget;
  std::uint64_t expansions = 0;

  std::vector<NodeId> nodes;
  std::vector<char> on_path;

  bool have_best = false;
  double best_rate = 0.0;
  double best_delay = 0.0;
  std::vector<NodeId> best_nodes;

  bool better(double rate, double delay) const {
    if (!have_best) return true;
    if (rate != best_rate) return rate > best_rate;
    if (delay != best_delay) return delay < best_delay;
    if (nodes.size() != best_nodes.size()) return nodes.size() < best_nodes.size();
    return std::lexicographical_compare(nodes.begin(), nodes.end(), best_nodes.begin(),
                                        best_nodes.end());
  }

  void visit(NodeId u, double rate, double delay) {
    if (++expansions > budget) {
      throw BudgetExceeded("brute force exceeded " + std::to_string(budget) + " expansions");
    }
    if (u == destination) {
      if (better(rate, delay)) {
        have_best = true;
        best_rate = rate;
        best_delay = delay;
        best_nodes = nodes;
      }
      return;
    }
    for (ArcId id : graph.out_arcs(u)) {
      const Link& arc = graph.arc(id);
      if (on_path[index_of(arc.to)]) continue;
      const double next_delay = delay + arc.delay;
      if (!(next_delay <= bound)) continue;
      on_path[index_of(arc.to)] = 1;
      nodes.push_back(arc.to);
      visit(arc.to, std::min(rate, arc.rate), next_delay);
      nodes.pop_back();
      on_path[index_of(arc.to)] = 0;
    }
  }
};

}  // namespace

RouteResult brute_force_route(const Graph& graph, const RouteQuery& query,
                              const BruteForceBudget& budget) {
  check_query(graph, query);
  if (graph.node_count() > budget.max_nodes) {
    throw BudgetExceeded("graph has " + std::to_string(graph.node_count()) +
                         " nodes, brute force limit is " + std::to_string(budget.max_nodes));
  }
  Search search{graph, query.destination, query.bound, budget.max_expansions};
  search.on_path.assign(graph.node_count(), 0);
  search.nodes.push_back(query.source);
  search.on_path[index_of(query.source)] = 1;
  search.visit(query.source, kInfiniteRate, 0.0);
  if (!search.have_best) return RouteResult::infeasible();
  Path path = Path::from_nodes(graph, search.best_nodes);
  return RouteResult::found(std::move(path), search.best_rate, search.best_delay);
}

namespace {

struct MinDelayTree {
  std::vector<double> delay;
  std::vector<std::int64_t> via;  // arc into the node, -1 for none
};

// Plain binary-heap Dijkstra on delay, restricted to links of rate >= min_rate.
MinDelayTree min_delay_tree(const Graph& graph, NodeId source, double min_rate) {
  const std::size_t n = graph.node_count();
  MinDelayTree tree{std::vector<double>(n, kUnreachable), std::vector<std::int64_t>(n, -1)};
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.delay[index_of(source)] = 0.0;
  heap.emplace(0.0, index_of(source));
  std::vector<char> done(n, 0);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (ArcId id : graph.out_arcs(node_id(u))) {
      const Link& arc = graph.arc(id);
      if (arc.rate < min_rate) continue;
      const std::size_t v = index_of(arc.to);
      const double candidate = d + arc.delay;
      if (candidate < tree.delay[v]) {
        tree.delay[v] = candidate;
        tree.via[v] = id;
        heap.emplace(candidate, v);
      }
    }
  }
  return tree;
}

}  // namespace

double min_delay_at_rate(const Graph& graph, NodeId source, NodeId destination, double min_rate) {
  if (!graph.contains(source) || !graph.contains(destination)) {
    throw InvalidQuery("node out of range");
  }
  return min_delay_tree(graph, source, min_rate).delay[index_of(destination)];
}

RouteResult threshold_exact_route(const Graph& graph, const RouteQuery& query) {
  check_query(graph, query);
  if (query.source == query.destination) {
    return RouteResult::found(Path(query.source), kInfiniteRate, 0.0);
  }
  std::vector<double> rates;
  rates.reserve(graph.arc_count());
  for (const Link& arc : graph.arcs()) rates.push_back(arc.rate);
  std::sort(rates.begin(), rates.end(), std::greater<>());
  rates.erase(std::unique(rates.begin(), rates.end()), rates.end());

  auto feasible = [&](std::size_t k) {
    return min_delay_at_rate(graph, query.source, query.destination, rates[k]) <= query.bound;
  };
  // rates is descending, so feasibility flips false -> true exactly once.
  std::size_t lo = 0;
  std::size_t hi = rates.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == rates.size()) return RouteResult::infeasible();

  const MinDelayTree tree = min_delay_tree(graph, query.source, rates[lo]);
  std::vector<ArcId> arcs;
  for (std::size_t at = index_of(query.destination); at != index_of(query.source);) {
    const auto id = static_cast<ArcId>(tree.via[at]);
    arcs.push_back(id);
    at = index_of(graph.arc(id).from);
  }
  Path path(query.source);
  for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) path = path_concat(path, graph.arc(*it));
  const double rate = path.rate();
  const double delay = path.delay();
  return RouteResult::found(std::move(path), rate, delay);
}

}  // namespace wmnroute
