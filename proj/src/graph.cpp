// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "wmnroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#include "wmnroute/errors.hpp"

namespace wmnroute {

Graph::Graph(std::size_t node_count, std::vector<Link> arcs, Directedness directedness,
             std::vector<Position> positions, std::vector<std::string> names)
    : node_count_(node_count),
      directedness_(directedness),
      arcs_(std::move(arcs)),
      positions_(std::move(positions)),
      names_(std::move(names)) {
  // Arcs with out-of-range endpoints stay in arcs_ so validate_graph can
  // report them, but never enter the adjacency.
  std::vector<std::uint32_t> degree(node_count_, 0);
  for (const Link& arc : arcs_) {
    if (contains(arc.from) && contains(arc.to)) ++degree[index_of(arc.from)];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Link& arc = arcs_[a];
    if (contains(arc.from) && contains(arc.to)) {
      adjacency_[cursor[index_of(arc.from)]++] = static_cast<ArcId>(a);
    }
  }
}

std::size_t Graph::link_count() const noexcept {
  return is_directed() ? arcs_.size() : arcs_.size() / 2;
}

std::span<const ArcId> Graph::out_arcs(NodeId node) const {
  const std::size_t i = index_of(node);
  if (i >= node_count_) throw InvalidQuery("node " + std::to_string(i) + " out of range");
  return std::span<const ArcId>(adjacency_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::optional<ArcId> Graph::find_arc(NodeId from, NodeId to) const {
  if (!contains(from) || !contains(to)) return std::nullopt;
  for (ArcId a : out_arcs(from)) {
    if (arcs_[a].to == to) return a;
  }
  return std::nullopt;
}

std::string Graph::name(NodeId node) const {
  if (!names_.empty() && index_of(node) < names_.size()) return names_[index_of(node)];
  return std::to_string(index_of(node));
}

std::optional<NodeId> Graph::find_node(std::string_view name) const {
  if (!names_.empty()) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return node_id(i);
    }
    return std::nullopt;
  }
  std::size_t value = 0;
  if (name.empty()) return std::nullopt;
  for (char c : name) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value >= node_count_) return std::nullopt;
  }
  return node_id(value);
}

std::vector<Link> Graph::physical_links() const {
  std::vector<Link> out;
  out.reserve(link_count());
  for (const Link& arc : arcs_) {
    if (is_directed() || index_of(arc.from) < index_of(arc.to)) out.push_back(arc);
  }
  return out;
}

namespace {

std::string describe(const Link& link) {
  return std::to_string(index_of(link.from)) + "->" + std::to_string(index_of(link.to));
}

bool link_attributes_valid(const Link& link) {
  return std::isfinite(link.rate) && link.rate > 0.0 && std::isfinite(link.delay) &&
         link.delay >= 0.0;
}

}  // namespace

Graph make_graph(std::size_t node_count, std::span<const Link> links, Directedness directedness,
                 std::vector<Position> positions, std::vector<std::string> names,
                 std::vector<std::string>* notes) {
  if (!positions.empty() && positions.size() != node_count) {
    throw InvalidGraph("position count does not match node count");
  }
  if (!names.empty()) {
    if (names.size() != node_count) throw InvalidGraph("name count does not match node count");
    std::set<std::string_view> seen;
    for (const auto& n : names) {
      if (n.empty()) throw InvalidGraph("empty node name");
      if (!seen.insert(n).second) throw InvalidGraph("duplicate node name '" + n + "'");
    }
  }

  const bool directed = directedness == Directedness::kDirected;
  std::vector<Link> kept;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (const Link& link : links) {
    if (index_of(link.from) >= node_count || index_of(link.to) >= node_count) {
      throw InvalidGraph("link " + describe(link) + " has an endpoint out of range");
    }
    if (link.from == link.to) throw InvalidGraph("self-loop at node " + describe(link));
    if (!link_attributes_valid(link)) {
      throw InvalidGraph("link " + describe(link) + " needs rate > 0 and delay >= 0");
    }
    auto key = std::make_pair(index_of(link.from), index_of(link.to));
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    auto [it, inserted] = slot.emplace(key, kept.size());
    if (inserted) {
      kept.push_back(link);
      continue;
    }
    Link& existing = kept[it->second];
    const bool better = link.rate > existing.rate ||
                        (link.rate == existing.rate && link.delay < existing.delay);
    if (notes) {
      notes->push_back("parallel link " + describe(link) + " collapsed, kept rate " +
                       std::to_string(better ? link.rate : existing.rate));
    }
    if (better) {
      existing.rate = link.rate;
      existing.delay = link.delay;
    }
  }

  std::vector<Link> arcs;
  arcs.reserve(directed ? kept.size() : 2 * kept.size());
  for (const Link& link : kept) {
    arcs.push_back(link);
    if (!directed) arcs.push_back(Link{link.to, link.from, link.rate, link.delay});
  }
  return Graph(node_count, std::move(arcs), directedness, std::move(positions), std::move(names));
}

std::vector<std::string> validate_graph(const Graph& graph) {
  std::vector<std::string> report;
  const std::size_t n = graph.node_count();
  std::multiset<std::pair<std::size_t, std::size_t>> seen;
  for (const Link& arc : graph.arcs()) {
    const bool in_range = index_of(arc.from) < n && index_of(arc.to) < n;
    if (!in_range) {
      report.push_back("arc " + describe(arc) + ": endpoint out of range");
      continue;
    }
    if (arc.from == arc.to) report.push_back("arc " + describe(arc) + ": self-loop");
    // An undirected link is checked once, through its lower-to-higher arc.
    const bool primary = graph.is_directed() || index_of(arc.from) < index_of(arc.to) ||
                         !graph.find_arc(arc.to, arc.from);
    if (primary && (!(arc.rate > 0.0) || !std::isfinite(arc.rate))) {
      report.push_back("arc " + describe(arc) + ": rate must be positive and finite");
    }
    if (primary && (!(arc.delay >= 0.0) || !std::isfinite(arc.delay))) {
      report.push_back("arc " + describe(arc) + ": delay must be nonnegative and finite");
    }
    seen.emplace(index_of(arc.from), index_of(arc.to));
  }
  for (auto it = seen.begin(); it != seen.end(); it = seen.upper_bound(*it)) {
    if (seen.count(*it) > 1) {
      report.push_back("arc " + std::to_string(it->first) + "->" + std::to_string(it->second) +
                       ": parallel arcs");
    }
  }
  if (!graph.is_directed()) {
    for (const Link& arc : graph.arcs()) {
      if (index_of(arc.from) >= n || index_of(arc.to) >= n || arc.from == arc.to) continue;
      const auto reverse = graph.find_arc(arc.to, arc.from);
      if (!reverse) {
        report.push_back("arc " + describe(arc) + ": missing reverse arc");
      } else if (graph.arc(*reverse).rate != arc.rate || graph.arc(*reverse).delay != arc.delay) {
        report.push_back("arc " + describe(arc) + ": reverse arc attributes differ");
      }
    }
  }
  if (graph.has_positions() && graph.positions().size() != n) {
    report.push_back("position count does not match node count");
  }
  return report;
}

Path Path::from_nodes(const Graph& graph, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw InvalidPath("path needs at least one node");
  if (!graph.contains(nodes.front())) throw InvalidPath("path node out of range");
  Path path(nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto arc = graph.find_arc(nodes[i - 1], nodes[i]);
    if (!arc) {
      throw InvalidPath("no link " + std::to_string(index_of(nodes[i - 1])) + "->" +
                        std::to_string(index_of(nodes[i])));
    }
    path.nodes_.push_back(nodes[i]);
    path.links_.push_back(graph.arc(*arc));
  }
  return path;
}

bool Path::contains(NodeId node) const noexcept {
  return std::find(nodes_.begin(), nodes_.end(), node) != nodes_.end();
}

bool Path::is_simple() const {
  std::unordered_set<std::uint32_t> seen;
  for (NodeId n : nodes_) {
    if (!seen.insert(static_cast<std::uint32_t>(n)).second) return false;
  }
  return true;
}

double Path::rate() const noexcept {
  double rate = kInfiniteRate;
  for (const Link& l : links_) rate = std::min(rate, l.rate);
  return rate;
}

double Path::delay() const noexcept {
  double delay = 0.0;
  for (const Link& l : links_) delay += l.delay;
  return delay;
}

namespace {

void check_against(const Path& path, const Graph& graph) {
  const auto nodes = path.nodes();
  const auto links = path.links();
  if (!graph.contains(nodes.front())) throw InvalidPath("path node out of range");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto arc = graph.find_arc(nodes[i], nodes[i + 1]);
    if (!arc || graph.arc(*arc) != links[i]) {
      throw InvalidPath("no link " + std::to_string(index_of(nodes[i])) + "->" +
                        std::to_string(index_of(nodes[i + 1])) + " in graph");
    }
  }
}

}  // namespace

double path_rate(const Path& path, const Graph& graph) {
  check_against(path, graph);
  return path.rate();
}

double path_delay(const Path& path, const Graph& graph) {
  check_against(path, graph);
  return path.delay();
}

Path path_concat(const Path& prefix, const Link& link) {
  if (link.from != prefix.destination()) {
    throw MismatchError("link starts at " + std::to_string(index_of(link.from)) +
                        " but path ends at " + std::to_string(index_of(prefix.destination())));
  }
  if (prefix.contains(link.to)) {
    throw CycleError("node " + std::to_string(index_of(link.to)) + " already on path");
  }
  Path out = prefix;
  out.nodes_.push_back(link.to);
  out.links_.push_back(link);
  return out;
}

}  // namespace wmnroute
