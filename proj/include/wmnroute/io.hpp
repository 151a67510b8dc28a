// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wmnroute/graph.hpp"
#include "wmnroute/route.hpp"
#include "wmnroute/topology.hpp"

namespace wmnroute {

inline constexpr int kGraphFormatVersion = 1;

/// Shortest decimal string that parses back to the same double; "inf" for
/// +infinity.
std::string format_decimal(double value);
/// Accepts anything format_decimal produces. Throws FormatError.
double parse_decimal(std::string_view text);

struct GraphFile {
  Graph graph;
  std::optional<TopologyParams> generator;
  /// Ingest notes such as collapsed parallel links.
  std::vector<std::string> notes;
};

// JSON graph file:
//   {"header": {"format_version": 1, "directed": false, "generator": {...}},
//    "nodes": [{"id": "u", "x": "12.5", "y": "80"}, ...],
//    "links": [{"from": "u", "to": "a", "rate_mbps": "5", "delay_ms": "2"}, ...]}
// Numbers are decimal strings. Undirected files list each link once.

nlohmann::ordered_json graph_to_json(const Graph& graph,
                                     const std::optional<TopologyParams>& generator = {});
GraphFile graph_from_json(const nlohmann::json& doc);
std::string save_graph_string(const Graph& graph,
                              const std::optional<TopologyParams>& generator = {});
GraphFile load_graph_string(std::string_view text);
void save_graph(const std::filesystem::path& path, const Graph& graph,
                const std::optional<TopologyParams>& generator = {});
GraphFile load_graph(const std::filesystem::path& path);

/// Same node count, directedness, names, positions and arc multiset.
bool structurally_equal(const Graph& a, const Graph& b);

nlohmann::ordered_json params_to_json(const TopologyParams& params);
TopologyParams params_from_json(const nlohmann::json& doc);

nlohmann::ordered_json query_to_json(const Graph& graph, const RouteQuery& query);
RouteQuery query_from_json(const Graph& graph, const nlohmann::json& doc);
nlohmann::ordered_json result_to_json(const Graph& graph, const RouteResult& result);
RouteResult result_from_json(const Graph& graph, const nlohmann::json& doc);

/// Graphviz rendering with "rate Mbps / delay ms" edge labels. Links on
/// `route` get color="red" and penwidth=3. Output is deterministic.
std::string export_dot(const Graph& graph, const std::optional<Path>& route = {});

/// Node lookup by symbolic name; throws InvalidQuery when absent.
NodeId resolve_node(const Graph& graph, std::string_view name);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace wmnroute
