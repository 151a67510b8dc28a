// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <sstream>
#include <utility>

#include "wmnroute/io.hpp"

namespace wmnroute {
namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Graph& graph, const std::optional<Path>& route) {
  const bool directed = graph.is_directed();
  std::set<std::pair<std::size_t, std::size_t>> highlighted;
  if (route) {
    for (const Link& link : route->links()) {
      auto key = std::make_pair(index_of(link.from), index_of(link.to));
      if (!directed && key.first > key.second) std::swap(key.first, key.second);
      highlighted.insert(key);
    }
  }

  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " wmn {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    out << "  " << quoted(graph.name(node_id(i)));
    if (graph.has_positions()) {
      const Position& p = graph.positions()[i];
      out << " [pos=\"" << format_decimal(p.x) << "," << format_decimal(p.y) << "!\"]";
    }
    out << ";\n";
  }
  const char* edge = directed ? " -> " : " -- ";
  for (const Link& link : graph.physical_links()) {
    auto key = std::make_pair(index_of(link.from), index_of(link.to));
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    out << "  " << quoted(graph.name(link.from)) << edge << quoted(graph.name(link.to))
        << " [label=\"" << format_decimal(link.rate) << " Mbps / " << format_decimal(link.delay)
        << " ms\"";
    if (highlighted.count(key) != 0) out << ", color=\"red\", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wmnroute
