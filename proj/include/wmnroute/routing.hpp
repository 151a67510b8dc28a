// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wmnroute/graph.hpp"
#include "wmnroute/route.hpp"
#include "wmnroute/simd/kernels.hpp"

namespace wmnroute {

// All four algorithms maximize the bottleneck rate subject to
// delay <= bound. The bound is inclusive: a path whose delay equals the
// bound is feasible.

/// Per-node DP state of the single-source algorithms.
struct Label {
  double rate = 0.0;
  double delay = kUnreachable;
  std::optional<NodeId> parent;
  bool visited = false;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Append-only store of path snapshots. Each entry is an earlier entry
/// extended by one arc, so a stored path never changes after it is written
/// even if the label it came from is later replaced.
class TrailArena {
 public:
  using Handle = std::int32_t;
  static constexpr Handle kNone = -1;

  Handle root(NodeId node);
  Handle extend(Handle prefix, NodeId node, ArcId arc);
  /// Throws NoPath for kNone.
  Path materialize(const Graph& graph, Handle handle) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    NodeId node;
    ArcId arc;
    Handle prev;
  };
  std::vector<Entry> entries_;
};

struct LabelTable {
  NodeId source{};
  double bound = 0.0;
  std::vector<Label> labels;
  std::vector<TrailArena::Handle> trail;
  TrailArena trails;

  const Label& label(NodeId node) const { return labels.at(index_of(node)); }
  bool reaches(NodeId node) const { return label(node).delay <= bound; }
};

/// Concatenation tree over arcs; an all-pairs entry's path is the
/// concatenation of the two entries it was composed from, frozen at that time.
class RopeArena {
 public:
  using Handle = std::int32_t;
  static constexpr Handle kNone = -1;
  static constexpr Handle kEmpty = -2;  // zero-hop path i -> i

  Handle leaf(ArcId arc);
  Handle concat(Handle left, Handle right);
  /// Arc sequence of a rope, left to right.
  std::vector<ArcId> arcs(Handle handle) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    std::int32_t left;   // arc id for leaves
    std::int32_t right;  // kNone for leaves
  };
  std::vector<Entry> entries_;
};

/// Row-major n x n rate/delay matrices plus reconstruction data.
struct AllPairsTable {
  std::size_t n = 0;
  double bound = 0.0;
  std::vector<double> rate;
  std::vector<double> delay;
  /// Predecessor of j on the stored i -> j path, -1 when none.
  std::vector<std::int32_t> parent;
  std::vector<RopeArena::Handle> route;
  RopeArena ropes;

  std::size_t at(NodeId i, NodeId j) const { return index_of(i) * n + index_of(j); }
  double rate_of(NodeId i, NodeId j) const { return rate[at(i, j)]; }
  double delay_of(NodeId i, NodeId j) const { return delay[at(i, j)]; }
  bool reaches(NodeId i, NodeId j) const { return delay[at(i, j)] <= bound; }
};

/// Delay-indexed table toward one destination: entry (u, d) holds the best
/// rate found for a u -> destination walk of exactly d ticks and the first
/// arc of that walk.
struct MraTable {
  struct Entry {
    double rate = 0.0;
    std::int32_t arc = -1;  // -1: NIL
  };

  NodeId destination{};
  double tick = 1.0;
  std::size_t bound_ticks = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> arc_ticks;
  std::vector<Entry> entries;  // index u * (bound_ticks + 1) + d

  const Entry& entry(NodeId u, std::size_t d) const {
    return entries.at(index_of(u) * (bound_ticks + 1) + d);
  }
};

struct MraOptions {
  /// Grid step in ms; derived from the link delays and bound when unset.
  std::optional<double> tick;
  /// Only accept walks whose delay is exactly the bound.
  bool exact_delay = false;
};

/// Label-setting variant: n-1 rounds, each fixing the unvisited node of
/// largest rate (linear scan) and relaxing its out-links.
LabelTable dijkstra_labels(const Graph& graph, NodeId source, double bound,
                           simd::Isa isa = simd::Isa::kAuto);
RouteResult route_dijkstra(const Graph& graph, const RouteQuery& query,
                           simd::Isa isa = simd::Isa::kAuto);

/// Label-correcting variant: n-1 rounds, each relaxing every arc in order.
LabelTable route_bellman_ford(const Graph& graph, NodeId source, double bound);

/// Intermediate-node variant over all pairs.
AllPairsTable route_floyd_warshall(const Graph& graph, double bound,
                                   simd::Isa isa = simd::Isa::kAuto);

/// Delay grid step: gcd of all link delays and the bound when each is a
/// rational with denominator <= 1000, else 1 ms.
double default_mra_tick(const Graph& graph, double bound);
/// Throws QuantizationError when a link delay is zero or off the grid, or
/// when the grid would be too large.
MraTable build_mra_table(const Graph& graph, NodeId destination, double bound, double tick);
RouteResult route_mra(const Graph& graph, const RouteQuery& query, const MraOptions& options = {});

/// Stored path for `destination`. Throws InvalidQuery when `source` is not
/// the table's source and NoPath when no feasible label exists.
Path extract_path(const Graph& graph, const LabelTable& table, NodeId source, NodeId destination);
Path extract_path(const Graph& graph, const AllPairsTable& table, NodeId source,
                  NodeId destination);
/// Walk recorded by an MRA entry; loop-erased if it revisits a node.
Path extract_path(const Graph& graph, const MraTable& table, NodeId source, std::size_t ticks);

RouteResult result_for(const Graph& graph, const LabelTable& table, NodeId destination);
RouteResult result_for(const Graph& graph, const AllPairsTable& table, NodeId source,
                       NodeId destination);

enum class Algorithm { kDijkstra, kBellmanFord, kFloydWarshall, kMra };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms = {
    Algorithm::kDijkstra, Algorithm::kBellmanFord, Algorithm::kFloydWarshall, Algorithm::kMra};

std::string_view algorithm_name(Algorithm algorithm) noexcept;
/// Accepts the canonical names plus "bf" and "fw".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct RouteOptions {
  simd::Isa isa = simd::Isa::kAuto;
  MraOptions mra;
};

/// Single-query entry point shared by the CLI and the harness.
RouteResult route(Algorithm algorithm, const Graph& graph, const RouteQuery& query,
                  const RouteOptions& options = {});

}  // namespace wmnroute
