#pragma once

// JSON graph input:
//   {"nodes": [{"id": "a", "package": "P"}, ...],
//    "edges": [["a", "b"], ...]}            // or [{"src": "a", "dst": "b"}, ...]

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "depmod/error.hpp"
#include "depmod/graph.hpp"

namespace depmod::io {

inline DependencyGraph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Syntax, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Syntax, "top level must be an object");

  auto string_field = [](const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_string())
      throw Error(ErrorKind::Syntax, where + ": missing string field '" + key + "'");
    return obj[key].get<std::string>();
  };

  GraphBuilder b;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw Error(ErrorKind::Syntax, "'nodes' must be an array");
    std::size_t k = 0;
    for (const auto& n : doc["nodes"]) {
      const auto where = "nodes[" + std::to_string(k++) + "]";
      b.add_node(NodeId(string_field(n, "id", where)), PackageId(string_field(n, "package", where)));
    }
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::Syntax, "'edges' must be an array");
    std::size_t k = 0;
    for (const auto& e : doc["edges"]) {
      const auto where = "edges[" + std::to_string(k++) + "]";
      if (e.is_array()) {
        if (e.size() != 2 || !e[0].is_string() || !e[1].is_string())
          throw Error(ErrorKind::Syntax, where + ": expected [src, dst]");
        b.add_edge(NodeId(e[0].get<std::string>()), NodeId(e[1].get<std::string>()));
      } else {
        b.add_edge(NodeId(string_field(e, "src", where)), NodeId(string_field(e, "dst", where)));
      }
    }
  }
  return b.build();
}

inline std::string serialize_json_graph(const DependencyGraph& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["edges"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.node_count(); ++i)
    doc["nodes"].push_back({{"id", g.node(i).str()}, {"package", g.package_at(i).str()}});
  for (const auto& e : g.edges()) doc["edges"].push_back({e.src.str(), e.dst.str()});
  return doc.dump(2) + "\n";
}

}  // namespace depmod::io
