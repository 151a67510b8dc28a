// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <variant>

#include "wmnroute/graph.hpp"

namespace wmnroute {

struct ConstantModel {
  double value = 0.0;
  friend bool operator==(const ConstantModel&, const ConstantModel&) = default;
};

/// Draws from [lo, hi).
struct UniformModel {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const UniformModel&, const UniformModel&) = default;
};

using AttributeModel = std::variant<ConstantModel, UniformModel>;

/// Random geometric topology: nodes uniform over an area_side x area_side
/// square (meters), linked iff their distance is at most `radius`.
///
/// Defaults: 50 nodes on 1000 m x 1000 m with 200 m coverage, rates
/// uniform in [1, 10) Mbps and a constant 2 ms link delay.
struct TopologyParams {
  std::size_t node_count = 50;
  double area_side = 1000.0;
  double radius = 200.0;
  std::uint64_t seed = 1;
  AttributeModel rate_model = UniformModel{1.0, 10.0};
  AttributeModel delay_model = ConstantModel{2.0};

  friend bool operator==(const TopologyParams&, const TopologyParams&) = default;
};

/// Throws InvalidParams describing the first violated constraint.
void check_params(const TopologyParams& params);

/// Deterministic in `params`. Draw order from one Xoshiro256(seed) stream:
/// x then y for node 0..n-1, then for each in-range pair (i < j,
/// lexicographic) one rate draw followed by one delay draw. Constant models
/// consume no draws.
Graph generate_topology(const TopologyParams& params);

/// Undirected reachability ignoring rates and delays.
bool is_connected(const Graph& graph, NodeId a, NodeId b);

/// Coverage radius giving expected degree `degree` for `node_count` nodes
/// on a square of side `area_side`, ignoring border effects.
double radius_for_degree(std::size_t node_count, double area_side, double degree);

}  // namespace wmnroute
