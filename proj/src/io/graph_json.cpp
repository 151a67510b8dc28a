// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"

namespace wmnroute {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Numbers may appear as decimal strings (what we write) or JSON numbers.
double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number()) return v.get<double>();
  throw FormatError(std::string("field '") + key + "' is not a number");
}

std::string id_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw FormatError("node id must be a string or integer");
}

ordered_json model_to_json(const AttributeModel& model) {
  if (const auto* c = std::get_if<ConstantModel>(&model)) {
    return ordered_json{{"kind", "constant"}, {"value", format_decimal(c->value)}};
  }
  const auto& u = std::get<UniformModel>(model);
  return ordered_json{{"kind", "uniform"}, {"lo", format_decimal(u.lo)}, {"hi", format_decimal(u.hi)}};
}

AttributeModel model_from_json(const json& doc) {
  const std::string kind = doc.value("kind", "");
  if (kind == "constant") return ConstantModel{number_field(doc, "value")};
  if (kind == "uniform") return UniformModel{number_field(doc, "lo"), number_field(doc, "hi")};
  throw FormatError("unknown attribute model '" + kind + "'");
}

}  // namespace

ordered_json params_to_json(const TopologyParams& params) {
  return ordered_json{{"n", params.node_count},
                      {"area_side", format_decimal(params.area_side)},
                      {"radius", format_decimal(params.radius)},
                      {"seed", params.seed},
                      {"rate_model", model_to_json(params.rate_model)},
                      {"delay_model", model_to_json(params.delay_model)}};
}

TopologyParams params_from_json(const json& doc) {
  TopologyParams p;
  try {
    p.node_count = doc.at("n").get<std::size_t>();
    p.area_side = number_field(doc, "area_side");
    p.radius = number_field(doc, "radius");
    p.seed = doc.at("seed").get<std::uint64_t>();
    p.rate_model = model_from_json(doc.at("rate_model"));
    p.delay_model = model_from_json(doc.at("delay_model"));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad generator header: ") + e.what());
  }
  return p;
}

ordered_json graph_to_json(const Graph& graph, const std::optional<TopologyParams>& generator) {
  ordered_json header{{"format_version", kGraphFormatVersion}, {"directed", graph.is_directed()}};
  if (generator) header["generator"] = params_to_json(*generator);

  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    ordered_json node{{"id", graph.name(node_id(i))}};
    if (graph.has_positions()) {
      node["x"] = format_decimal(graph.positions()[i].x);
      node["y"] = format_decimal(graph.positions()[i].y);
    }
    nodes.push_back(std::move(node));
  }
  ordered_json links = ordered_json::array();
  for (const Link& link : graph.physical_links()) {
    links.push_back(ordered_json{{"from", graph.name(link.from)},
                                 {"to", graph.name(link.to)},
                                 {"rate_mbps", format_decimal(link.rate)},
                                 {"delay_ms", format_decimal(link.delay)}});
  }
  return ordered_json{{"header", std::move(header)}, {"nodes", std::move(nodes)},
                      {"links", std::move(links)}};
}

GraphFile graph_from_json(const json& doc) {
  try {
    const json& header = doc.at("header");
    const int version = header.at("format_version").get<int>();
    if (version != kGraphFormatVersion) {
      throw FormatError("unsupported format_version " + std::to_string(version));
    }
    const bool directed = header.value("directed", false);

    GraphFile file;
    if (header.contains("generator")) file.generator = params_from_json(header.at("generator"));

    const json& nodes = doc.at("nodes");
    std::vector<std::string> names;
    std::vector<Position> positions;
    std::unordered_map<std::string, std::size_t> index;
    bool any_position = false;
    for (const json& node : nodes) {
      const std::string id = id_text(node.at("id"));
      if (!index.emplace(id, names.size()).second) throw FormatError("duplicate node id '" + id + "'");
      names.push_back(id);
      if (node.contains("x") || node.contains("y")) {
        any_position = true;
        positions.push_back(Position{number_field(node, "x"), number_field(node, "y")});
      } else {
        positions.push_back(Position{});
      }
    }
    if (any_position) {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].contains("x")) throw FormatError("positions must be given for all nodes or none");
      }
    } else {
      positions.clear();
    }
    // Ids "0".."n-1" in order are plain indices, not symbolic names.
    bool plain = true;
    for (std::size_t i = 0; i < names.size() && plain; ++i) plain = names[i] == std::to_string(i);
    if (plain) names.clear();

    std::vector<Link> links;
    for (const json& link : doc.at("links")) {
      const std::string from = id_text(link.at("from"));
      const std::string to = id_text(link.at("to"));
      const auto f = index.find(from);
      const auto t = index.find(to);
      if (f == index.end() || t == index.end()) {
        throw FormatError("link " + from + "-" + to + " names an unknown node");
      }
      links.push_back(Link{node_id(f->second), node_id(t->second), number_field(link, "rate_mbps"),
                           number_field(link, "delay_ms")});
    }
    try {
      file.graph = make_graph(nodes.size(), links,
                              directed ? Directedness::kDirected : Directedness::kUndirected,
                              std::move(positions), std::move(names), &file.notes);
    } catch (const InvalidGraph& e) {
      throw FormatError(std::string("invalid graph: ") + e.what());
    }
    return file;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed graph file: ") + e.what());
  }
}

std::string save_graph_string(const Graph& graph, const std::optional<TopologyParams>& generator) {
  return graph_to_json(graph, generator).dump(2) + "\n";
}

GraphFile load_graph_string(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

void save_graph(const std::filesystem::path& path, const Graph& graph,
                const std::optional<TopologyParams>& generator) {
  write_text_file(path, save_graph_string(graph, generator));
}

GraphFile load_graph(const std::filesystem::path& path) {
  return load_graph_string(read_text_file(path));
}

bool structurally_equal(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.directedness() != b.directedness()) return false;
  if (a.has_positions() != b.has_positions()) return false;
  if (!std::equal(a.positions().begin(), a.positions().end(), b.positions().begin(),
                  b.positions().end())) {
    return false;
  }
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    if (a.name(node_id(i)) != b.name(node_id(i))) return false;
  }
  auto sorted = [](const Graph& g) {
    std::vector<Link> arcs(g.arcs().begin(), g.arcs().end());
    std::sort(arcs.begin(), arcs.end(), [](const Link& x, const Link& y) {
      return std::tie(x.from, x.to, x.rate, x.delay) < std::tie(y.from, y.to, y.rate, y.delay);
    });
    return arcs;
  };
  return sorted(a) == sorted(b);
}

NodeId resolve_node(const Graph& graph, std::string_view name) {
  const auto id = graph.find_node(name);
  if (!id) throw InvalidQuery("unknown node '" + std::string(name) + "'");
  return *id;
}

ordered_json query_to_json(const Graph& graph, const RouteQuery& query) {
  return ordered_json{{"source", graph.name(query.source)},
                      {"destination", graph.name(query.destination)},
                      {"bound_ms", format_decimal(query.bound)}};
}

RouteQuery query_from_json(const Graph& graph, const json& doc) {
  try {
    return RouteQuery{resolve_node(graph, id_text(doc.at("source"))),
                      resolve_node(graph, id_text(doc.at("destination"))),
                      number_field(doc, "bound_ms")};
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed query: ") + e.what());
  }
}

ordered_json result_to_json(const Graph& graph, const RouteResult& result) {
  if (!result.is_found()) return ordered_json{{"status", "infeasible"}};
  ordered_json path = ordered_json::array();
  for (NodeId node : result.path->nodes()) path.push_back(graph.name(node));
  return ordered_json{{"status", "found"},
                      {"path", std::move(path)},
                      {"rate_mbps", format_decimal(result.rate)},
                      {"delay_ms", format_decimal(result.delay)}};
}

RouteResult result_from_json(const Graph& graph, const json& doc) {
  try {
    const std::string status = doc.at("status").get<std::string>();
    if (status == "infeasible") return RouteResult::infeasible();
    if (status != "found") throw FormatError("unknown status '" + status + "'");
    std::vector<NodeId> nodes;
    for (const json& name : doc.at("path")) nodes.push_back(resolve_node(graph, id_text(name)));
    return RouteResult::found(Path::from_nodes(graph, nodes), number_field(doc, "rate_mbps"),
                              number_field(doc, "delay_ms"));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed result: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace wmnroute
