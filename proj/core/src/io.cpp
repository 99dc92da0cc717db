#include "girthroot/io.hpp"

#include <algorithm>
#include <charconv>
#include <nlohmann/json.hpp>
#include <sstream>

namespace girthroot {

using nlohmann::json;

std::string to_json(const Graph& g, const VertexLabeling* labels) {
  json edges = json::array();
  for (auto [u, v] : canonical_edges(g)) edges.push_back({u, v});
  json doc{{"n", g.vertex_count()}, {"edges", edges}};
  if (labels) {
    json names = json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) names.push_back(labels->label(v));
    doc["labels"] = names;
  }
  return doc.dump();
}

ParsedGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw GraphError("graph JSON needs \"n\" and \"edges\"");
  }
  try {
    auto n = doc.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    ParsedGraph out;
    out.graph = Graph::from_edges(n, edges);
    if (doc.contains("labels")) {
      const auto& labels = doc.at("labels");
      if (labels.size() != n) throw GraphError("labels must list every vertex");
      for (const auto& l : labels) out.labels.intern(l.get<std::string>());
      if (out.labels.size() != n) throw GraphError("labels must be distinct");
    } else {
      out.labels = VertexLabeling::identity(n);
    }
    return out;
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
}

namespace {

std::string name(Vertex v, const VertexLabeling* labels) {
  return labels ? labels->label(v) : std::to_string(v);
}

}  // namespace

std::string to_dot(const Graph& g, const VertexLabeling* labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=" << json(name(v, labels)).dump() << "];\n";
  }
  for (auto [u, v] : canonical_edges(g)) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Graph& g, const VertexLabeling* labels) {
  std::ostringstream out;
  auto edges = canonical_edges(g);
  // Reparsing assigns ids by first appearance; declare vertices up front when
  // the edge order alone would permute them.
  Vertex next = 0;
  bool ordered = true;
  for (auto [u, v] : edges) {
    for (Vertex w : {u, v}) {
      if (w == next) ++next;
      else if (w > next) ordered = false;
    }
  }
  if (!ordered || next != g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << name(v, labels) << "\n";
  }
  for (auto [u, v] : edges) out << name(u, labels) << " " << name(v, labels) << "\n";
  return out.str();
}

ParsedGraph read_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return graph_from_json(text);
  return parse_edge_list(text);
}

DepthPartition parse_depth_partition(std::string_view text, const Graph& g,
                                     const VertexLabeling& labels, std::uint32_t r) {
  DepthPartition part;
  part.layers.assign(r, {});
  bool have_anchor = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  auto resolve = [&](const std::string& tok) {
    auto id = labels.find(tok);
    if (!id) throw GraphError("partition line " + std::to_string(lineno) + ": unknown vertex '" + tok + "'");
    return *id;
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw GraphError("partition line " + std::to_string(lineno) + " lacks ':'");
    }
    std::istringstream key_in(line.substr(0, colon));
    std::string key, extra;
    key_in >> key;
    if (key.empty() || (key_in >> extra)) {
      throw GraphError("partition line " + std::to_string(lineno) + " has a malformed key");
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<Vertex> ids;
    for (std::string tok; rest >> tok;) ids.push_back(resolve(tok));
    VertexSet* target = nullptr;
    if (key == "v") {
      if (have_anchor || ids.size() != 1) {
        throw GraphError("partition needs exactly one anchor line with one vertex");
      }
      part.anchor = ids[0];
      have_anchor = true;
      continue;
    }
    if (key == ">") {
      target = &part.overflow;
    } else {
      std::uint32_t d = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), d);
      if (ec != std::errc() || ptr != key.data() + key.size() || d < 1 || d > r) {
        throw GraphError("partition line " + std::to_string(lineno) + ": layer must be 1.." +
                         std::to_string(r) + " or '>'");
      }
      target = &part.layers[d - 1];
    }
    target->insert(target->end(), ids.begin(), ids.end());
    std::sort(target->begin(), target->end());
  }
  if (!have_anchor) throw GraphError("partition lacks the anchor line \"v: <vertex>\"");
  validate_partition(g, r, part);
  return part;
}

}  // namespace girthroot
