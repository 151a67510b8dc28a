// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <doctest.h>

#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/oracle.hpp"
#include "wmnroute/rng.hpp"
#include "wmnroute/topology.hpp"

using namespace wmnroute;

// Reference values below come from tools/oracles/topology_reference.py.

TEST_CASE("generator streams match the reference model") {
  CHECK(SplitMix64(0).next() == 16294208416658607535ULL);
  Xoshiro256 rng(0);
  CHECK(rng.next() == 11091344671253066420ULL);
  CHECK(rng.next() == 13793997310169335082ULL);
  CHECK(rng.next() == 1900383378846508768ULL);
}

TEST_CASE("seeded topology matches the reference model") {
  TopologyParams p;
  p.node_count = 50;
  p.area_side = 1000;
  p.radius = 200;
  p.seed = 7;
  const Graph g = generate_topology(p);
  CHECK(g.node_count() == 50);
  CHECK(g.link_count() == 115);
  CHECK(format_decimal(g.positions()[0].x) == "700.5764821796896");
  CHECK(format_decimal(g.positions()[0].y) == "278.7512294737843");
  const auto links = g.physical_links();
  CHECK(index_of(links.front().to) == 11);
  CHECK(format_decimal(links.front().rate) == "7.353477082418341");
  CHECK(index_of(links.back().from) == 39);
  CHECK(index_of(links.back().to) == 44);
  CHECK(format_decimal(links.back().rate) == "3.2513257568075176");
  for (const Link& l : links) {
    const Position a = g.positions()[index_of(l.from)];
    const Position b = g.positions()[index_of(l.to)];
    CHECK(std::hypot(a.x - b.x, a.y - b.y) <= 200.0 + 1e-9);
    CHECK(l.delay == 2.0);
  }
}

TEST_CASE("uniform draws stay below the upper bound") {
  Xoshiro256 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.uniform(1.0, 1.0 + 1e-15);
    CHECK(v >= 1.0);
    CHECK(v < 1.0 + 1e-15);
  }
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 1000ULL}) CHECK(rng.below(bound) < bound);
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
}

TEST_CASE("degenerate parameters") {
  TopologyParams p;
  p.node_count = 1;
  CHECK(generate_topology(p).link_count() == 0);

  p.radius = 0;
  CHECK_THROWS_AS(generate_topology(p), InvalidParams);
  p.radius = 200;
  p.node_count = 0;
  CHECK_THROWS_AS(check_params(p), InvalidParams);
  p.node_count = 5;
  p.rate_model = UniformModel{3, 3};
  CHECK_THROWS_AS(check_params(p), InvalidParams);
  p.rate_model = ConstantModel{0};
  CHECK_THROWS_AS(check_params(p), InvalidParams);
  p.rate_model = ConstantModel{4};
  p.delay_model = ConstantModel{-1};
  CHECK_THROWS_AS(check_params(p), InvalidParams);
}

TEST_CASE("constant models consume no draws") {
  TopologyParams a;
  a.node_count = 30;
  a.rate_model = ConstantModel{4};
  TopologyParams b = a;
  b.delay_model = ConstantModel{3};
  const Graph ga = generate_topology(a);
  const Graph gb = generate_topology(b);
  REQUIRE(ga.link_count() == gb.link_count());
  for (std::size_t i = 0; i < ga.positions().size(); ++i) {
    CHECK(ga.positions()[i] == gb.positions()[i]);
  }
}

TEST_CASE("connectivity") {
  const Graph cg = canonical_graph();
  CHECK(is_connected(cg, *cg.find_node("u"), *cg.find_node("y")));
  const Graph split = make_graph(4, std::vector<Link>{{node_id(0), node_id(1), 1, 1}},
                                 Directedness::kUndirected);
  CHECK_FALSE(is_connected(split, node_id(0), node_id(2)));
  CHECK(is_connected(split, node_id(3), node_id(3)));
  const Graph one_way = make_graph(2, std::vector<Link>{{node_id(1), node_id(0), 1, 1}},
                                   Directedness::kDirected);
  CHECK(is_connected(one_way, node_id(0), node_id(1)));
}

TEST_CASE("radius for a target degree") {
  const double r = radius_for_degree(101, 1000, 8);
  CHECK(std::abs(3.141592653589793 * r * r / 1e6 * 100 - 8) < 1e-9);
  CHECK(radius_for_degree(1, 500, 8) == 500);
}
