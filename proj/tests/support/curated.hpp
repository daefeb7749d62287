#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depmod/fixtures.hpp"
#include "depmod/graph.hpp"

namespace depmod::test_support {

struct NamedGraph {
  std::string name;
  DependencyGraph graph;
};

inline DependencyGraph from_edges(const std::vector<std::string>& nodes,
                                  const std::vector<std::pair<std::string, std::string>>& edges,
                                  const std::string& package = "P") {
  GraphBuilder b;
  for (const auto& n : nodes) b.add_node(NodeId(n), PackageId(package));
  for (const auto& [s, d] : edges) b.add_edge(NodeId(s), NodeId(d));
  return b.build();
}

/// Small graphs (at most 6 nodes) on which greedy agglomeration is checked against the
/// exhaustive optimum.
inline std::vector<NamedGraph> curated_small_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"two-3-cycles", fixtures::two_cycles("A", "B")});
  out.push_back({"3-cycle", fixtures::cycle3()});
  out.push_back({"single-edge", from_edges({"a", "b"}, {{"a", "b"}})});
  out.push_back({"4-cycle", from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})});
  out.push_back({"two-reciprocal-pairs",
                 from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}})});
  out.push_back({"two-3-cycles-bridged",
                 from_edges({"a", "b", "c", "d", "e", "f"},
                            {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}, {"c", "d"}})});
  out.push_back({"out-star", from_edges({"h", "x", "y", "z"}, {{"h", "x"}, {"h", "y"}, {"h", "z"}})});
  out.push_back({"path-4", from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})});
  out.push_back({"clique-3-plus-pendant",
                 from_edges({"a", "b", "c", "d"},
                            {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"a", "c"}, {"c", "a"}, {"d", "a"}})});
  out.push_back({"two-pairs-one-bridge",
                 from_edges({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"b", "c"}, {"e", "d"}})});
  return out;
}

}  // namespace depmod::test_support
