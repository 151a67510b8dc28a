// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wmnroute {

/// Dense node index in [0, node_count).
enum class NodeId : std::uint32_t {};

constexpr std::size_t index_of(NodeId id) noexcept { return static_cast<std::size_t>(id); }
constexpr NodeId node_id(std::size_t index) noexcept { return static_cast<NodeId>(index); }

/// Bottleneck rate of a path with no links. Never carried by a link.
inline constexpr double kInfiniteRate = std::numeric_limits<double>::infinity();
/// Delay label of a node no feasible path reaches.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// A directed arc. Rate in Mbps, delay in ms.
struct Link {
  NodeId from{};
  NodeId to{};
  double rate = 0.0;
  double delay = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

enum class Directedness { kUndirected, kDirected };

using ArcId = std::uint32_t;

/// Immutable node/arc container with CSR out-adjacency.
///
/// Undirected graphs store every physical link as two arcs with identical
/// rate and delay. The constructor does no validation (see validate_graph);
/// use make_graph to build a checked, deduplicated graph from link records.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, std::vector<Link> arcs, Directedness directedness,
        std::vector<Position> positions = {}, std::vector<std::string> names = {});

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  /// Physical link count: arcs for directed graphs, arc pairs otherwise.
  std::size_t link_count() const noexcept;

  Directedness directedness() const noexcept { return directedness_; }
  bool is_directed() const noexcept { return directedness_ == Directedness::kDirected; }

  std::span<const Link> arcs() const noexcept { return arcs_; }
  const Link& arc(ArcId id) const { return arcs_.at(id); }
  std::span<const ArcId> out_arcs(NodeId node) const;
  std::optional<ArcId> find_arc(NodeId from, NodeId to) const;

  bool has_positions() const noexcept { return !positions_.empty(); }
  std::span<const Position> positions() const noexcept { return positions_; }

  /// Symbolic name; defaults to the decimal index.
  std::string name(NodeId node) const;
  bool has_names() const noexcept { return !names_.empty(); }
  std::optional<NodeId> find_node(std::string_view name) const;

  /// Each physical link once, in arc order. Undirected graphs keep the
  /// arc whose `from` is smaller.
  std::vector<Link> physical_links() const;

  bool contains(NodeId node) const noexcept { return index_of(node) < node_count_; }

 private:
  std::size_t node_count_ = 0;
  Directedness directedness_ = Directedness::kUndirected;
  std::vector<Link> arcs_;
  std::vector<Position> positions_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<ArcId> adjacency_;
};

/// Builds a validated graph from physical links. Parallel links collapse to
/// the one with the higher rate (then lower delay); each collapse appends a
/// line to `notes` when given. Throws InvalidGraph on bad input.
Graph make_graph(std::size_t node_count, std::span<const Link> links, Directedness directedness,
                 std::vector<Position> positions = {}, std::vector<std::string> names = {},
                 std::vector<std::string>* notes = nullptr);

/// Human-readable list of violated invariants; empty when the graph is valid.
std::vector<std::string> validate_graph(const Graph& graph);

/// Ordered node sequence plus the links joining consecutive nodes.
class Path {
 public:
  explicit Path(NodeId start) : nodes_{start} {}

  /// Resolves links through `graph`. Throws InvalidPath when a
  /// consecutive pair has no arc.
  static Path from_nodes(const Graph& graph, std::span<const NodeId> nodes);

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const Link> links() const noexcept { return links_; }
  NodeId source() const noexcept { return nodes_.front(); }
  NodeId destination() const noexcept { return nodes_.back(); }
  std::size_t hop_count() const noexcept { return links_.size(); }
  bool contains(NodeId node) const noexcept;
  bool is_simple() const;

  /// Min of stored link rates, kInfiniteRate for a single node.
  double rate() const noexcept;
  /// Left-to-right sum of stored link delays.
  double delay() const noexcept;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  friend Path path_concat(const Path& prefix, const Link& link);

  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
};

/// Bottleneck rate after checking every link against `graph`.
double path_rate(const Path& path, const Graph& graph);
/// End-to-end delay after checking every link against `graph`.
double path_delay(const Path& path, const Graph& graph);

/// Appends `link`. Throws MismatchError when link.from is not the last node
/// and CycleError when link.to is already on the path.
Path path_concat(const Path& prefix, const Link& link);

}  // namespace wmnroute
