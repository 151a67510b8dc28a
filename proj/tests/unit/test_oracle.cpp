// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

// Ground truth first: the canonical fixture and every value frozen from it
// are re-derived here by exhaustive enumeration before other suites use them.

#include <doctest.h>

#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/oracle.hpp"

using namespace wmnroute;

namespace {

NodeId n(const Graph& g, const char* name) { return *g.find_node(name); }

std::vector<std::string> names(const Graph& g, const Path& p) {
  std::vector<std::string> out;
  for (NodeId v : p.nodes()) out.push_back(g.name(v));
  return out;
}

}  // namespace

TEST_CASE("fixture file matches the built-in canonical graph") {
  const GraphFile file = load_graph(WMNROUTE_FIXTURE_DIR "/canonical_cg.json");
  const Graph cg = canonical_graph();
  CHECK(structurally_equal(file.graph, cg));
  CHECK(file.notes.empty());
  CHECK(validate_graph(cg).empty());
  CHECK(cg.node_count() == 6);
  CHECK(cg.link_count() == 6);
  for (const char* name : {"u", "a", "w", "b", "x", "y"}) CHECK(file.graph.find_node(name));
}

TEST_CASE("brute force on the canonical graph") {
  const Graph cg = canonical_graph();
  const NodeId u = n(cg, "u"), w = n(cg, "w"), y = n(cg, "y");

  const RouteResult at6 = brute_force_route(cg, {u, y, 6.0});
  REQUIRE(at6.is_found());
  CHECK(at6.rate == 5.0);
  CHECK(at6.delay == 6.0);
  CHECK(names(cg, *at6.path) == std::vector<std::string>{"u", "a", "w", "y"});

  CHECK_FALSE(brute_force_route(cg, {u, y, 4.0}).is_found());
  CHECK_FALSE(brute_force_route(cg, {u, y, 5.999}).is_found());

  const RouteResult wide = brute_force_route(cg, {u, y, 100.0});
  CHECK(wide.rate == 5.0);

  const RouteResult to_w = brute_force_route(cg, {u, w, 4.0});
  CHECK(to_w.rate == 5.0);
  CHECK(to_w.delay == 4.0);

  const RouteResult self = brute_force_route(cg, {u, u, 0.0});
  CHECK(self.rate == kInfiniteRate);
  CHECK(self.delay == 0.0);
}

TEST_CASE("threshold oracle on the canonical graph") {
  const Graph cg = canonical_graph();
  const NodeId u = n(cg, "u"), y = n(cg, "y");
  CHECK(threshold_exact_route(cg, {u, y, 6.0}).rate == 5.0);
  CHECK_FALSE(threshold_exact_route(cg, {u, y, 4.0}).is_found());
  CHECK(threshold_exact_route(cg, {u, y, 100.0}).rate == 5.0);
  CHECK(min_delay_at_rate(cg, u, y, 5.0) == 6.0);
  CHECK(min_delay_at_rate(cg, u, y, 3.0) == 6.0);
  CHECK(min_delay_at_rate(cg, u, y, 6.0) == kUnreachable);
}

TEST_CASE("brute force breaks rate ties by delay, then hops") {
  // Two rate-4 routes 0 -> 3: a short slow one and a long fast one.
  const std::vector<Link> links{{node_id(0), node_id(3), 4, 5},
                                {node_id(0), node_id(1), 4, 1},
                                {node_id(1), node_id(2), 9, 1},
                                {node_id(2), node_id(3), 9, 1}};
  const Graph g = make_graph(4, links, Directedness::kUndirected);
  const RouteResult r = brute_force_route(g, {node_id(0), node_id(3), 10.0});
  CHECK(r.rate == 4.0);
  CHECK(r.delay == 3.0);
  CHECK(r.path->hop_count() == 3);
}

TEST_CASE("brute force budget") {
  std::vector<Link> links;
  for (std::size_t i = 0; i + 1 < 15; ++i) links.push_back({node_id(i), node_id(i + 1), 1, 1});
  const Graph g = make_graph(15, links, Directedness::kUndirected);
  CHECK_THROWS_AS(brute_force_route(g, {node_id(0), node_id(14), 100}), BudgetExceeded);
  CHECK(threshold_exact_route(g, {node_id(0), node_id(14), 100}).delay == 14.0);

  BruteForceBudget tight;
  tight.max_expansions = 2;
  const Graph cg = canonical_graph();
  CHECK_THROWS_AS(brute_force_route(cg, {node_id(0), node_id(5), 100}, tight), BudgetExceeded);
}

TEST_CASE("oracles reject bad queries") {
  const Graph cg = canonical_graph();
  CHECK_THROWS_AS(brute_force_route(cg, {node_id(0), node_id(9), 6}), InvalidQuery);
  CHECK_THROWS_AS(threshold_exact_route(cg, {node_id(0), node_id(5), -1}), InvalidQuery);
}
