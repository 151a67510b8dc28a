// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/topology.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "wmnroute/errors.hpp"
#include "wmnroute/rng.hpp"

namespace wmnroute {
namespace {

void check_model(const AttributeModel& model, const char* what, bool allow_zero) {
  if (const auto* c = std::get_if<ConstantModel>(&model)) {
    const bool ok = std::isfinite(c->value) && (allow_zero ? c->value >= 0.0 : c->value > 0.0);
    if (!ok) throw InvalidParams(std::string(what) + " constant out of range");
    return;
  }
  const auto& u = std::get<UniformModel>(model);
  if (!std::isfinite(u.lo) || !std::isfinite(u.hi) || !(u.lo < u.hi)) {
    throw InvalidParams(std::string(what) + " uniform model needs lo < hi");
  }
  if (allow_zero ? u.lo < 0.0 : u.lo <= 0.0) {
    throw InvalidParams(std::string(what) + " uniform lower bound out of range");
  }
}

double draw(const AttributeModel& model, Xoshiro256& rng) {
  if (const auto* c = std::get_if<ConstantModel>(&model)) return c->value;
  const auto& u = std::get<UniformModel>(model);
  return rng.uniform(u.lo, u.hi);
}

}  // namespace

void check_params(const TopologyParams& params) {
  if (params.node_count < 1) throw InvalidParams("node count must be at least 1");
  if (params.node_count > (std::size_t{1} << 24)) throw InvalidParams("node count too large");
  if (!(params.area_side > 0.0) || !std::isfinite(params.area_side)) {
    throw InvalidParams("area side must be positive");
  }
  if (!(params.radius > 0.0) || !std::isfinite(params.radius)) {
    throw InvalidParams("radius must be positive");
  }
  check_model(params.rate_model, "rate", false);
  check_model(params.delay_model, "delay", true);
}

Graph generate_topology(const TopologyParams& params) {
  check_params(params);
  Xoshiro256 rng(params.seed);
  const std::size_t n = params.node_count;

  std::vector<Position> positions(n);
  for (auto& p : positions) {
    p.x = rng.unit() * params.area_side;
    p.y = rng.unit() * params.area_side;
  }

  const double r2 = params.radius * params.radius;
  std::vector<Link> links;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = positions[i].x - positions[j].x;
      const double dy = positions[i].y - positions[j].y;
      if (dx * dx + dy * dy > r2) continue;
      const double rate = draw(params.rate_model, rng);
      const double delay = draw(params.delay_model, rng);
      links.push_back(Link{node_id(i), node_id(j), rate, delay});
    }
  }
  return make_graph(n, links, Directedness::kUndirected, std::move(positions));
}

bool is_connected(const Graph& graph, NodeId a, NodeId b) {
  if (!graph.contains(a) || !graph.contains(b)) throw InvalidQuery("node out of range");
  if (a == b) return true;
  // Directed input is also walked backwards.
  std::vector<std::vector<std::uint32_t>> reverse;
  if (graph.is_directed()) {
    reverse.resize(graph.node_count());
    for (const Link& arc : graph.arcs()) {
      reverse[index_of(arc.to)].push_back(static_cast<std::uint32_t>(index_of(arc.from)));
    }
  }
  std::vector<char> seen(graph.node_count(), 0);
  std::queue<std::size_t> frontier;
  seen[index_of(a)] = 1;
  frontier.push(index_of(a));
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    auto visit = [&](std::size_t v) {
      if (!seen[v]) {
        seen[v] = 1;
        frontier.push(v);
      }
    };
    for (ArcId arc : graph.out_arcs(node_id(u))) visit(index_of(graph.arc(arc).to));
    if (!reverse.empty()) {
      for (std::uint32_t v : reverse[u]) visit(v);
    }
  }
  return seen[index_of(b)] != 0;
}

double radius_for_degree(std::size_t node_count, double area_side, double degree) {
  if (node_count < 2) return area_side;
  return area_side * std::sqrt(degree / (std::numbers::pi * static_cast<double>(node_count - 1)));
}

}  // namespace wmnroute
