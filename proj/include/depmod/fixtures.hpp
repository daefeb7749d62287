#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depmod/graph.hpp"
#include "depmod/moves.hpp"
#include "depmod/rational.hpp"

namespace depmod::fixtures {

/// Two-package example: classes 1-4 in the stable package C2, 5-8 in the unstable package C1,
/// ten edges, and the candidate move of class 1 into C1.
///
/// Condition (a) has no SDP violation. Condition (b) adds the stable-to-unstable edge 1 -> 5.
/// `published_gained` / `published_lost` are the contribution terms as printed for the worked
/// example. For (a) they coincide with the terms read off the graph. For (b) the printed terms
/// use degree product 1x1 everywhere, which no ten-edge graph with four edges at class 1 can
/// produce; the graph below is chosen so that its own terms still sum to the printed total.
struct WorkedExample {
  std::string name;
  DependencyGraph graph;
  Move move;
  std::vector<ContributionTerm> published_gained;
  std::vector<ContributionTerm> published_lost;
  Rational published_delta;
};

namespace detail {

inline DependencyGraph build(const std::vector<std::pair<const char*, const char*>>& edges) {
  GraphBuilder b;
  for (const char* n : {"1", "2", "3", "4"}) b.add_node(NodeId(n), PackageId("C2"));
  for (const char* n : {"5", "6", "7", "8"}) b.add_node(NodeId(n), PackageId("C1"));
  for (auto [s, d] : edges) b.add_edge(NodeId(s), NodeId(d));
  return b.build();
}

}  // namespace detail

inline WorkedExample condition_a() {
  return {"a",
          detail::build({{"5", "1"}, {"6", "1"}, {"7", "1"}, {"8", "1"}, {"1", "3"},
                         {"5", "6"}, {"5", "7"}, {"5", "8"}, {"2", "4"}, {"3", "2"}}),
          {NodeId("1"), PackageId("C2"), PackageId("C1")},
          {{4, 4, true}, {1, 4, true}, {1, 4, true}, {1, 4, true}},
          {{1, 1, true}},
          Rational(33, 20)};
}

inline WorkedExample condition_b() {
  return {"b",
          detail::build({{"1", "5"}, {"6", "1"}, {"7", "1"}, {"8", "1"}, {"1", "3"},
                         {"2", "3"}, {"4", "3"}, {"5", "3"}, {"2", "4"}, {"5", "6"}}),
          {NodeId("1"), PackageId("C2"), PackageId("C1")},
          {{1, 1, true}, {1, 1, true}, {1, 1, true}, {1, 1, true}},
          {{1, 1, true}},
          Rational(57, 20)};
}

/// Two directed 3-cycles: {a,b,c} in package `first`, {d,e,f} in package `second`.
inline DependencyGraph two_cycles(const std::string& first = "P", const std::string& second = "P") {
  GraphBuilder b;
  for (const char* n : {"a", "b", "c"}) b.add_node(NodeId(n), PackageId(first));
  for (const char* n : {"d", "e", "f"}) b.add_node(NodeId(n), PackageId(second));
  for (auto [s, d] : {std::pair{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}})
    b.add_edge(NodeId(s), NodeId(d));
  return b.build();
}

inline DependencyGraph cycle3(const std::string& package = "P") {
  GraphBuilder b;
  for (const char* n : {"a", "b", "c"}) b.add_node(NodeId(n), PackageId(package));
  b.add_edge(NodeId("a"), NodeId("b")).add_edge(NodeId("b"), NodeId("c")).add_edge(NodeId("c"), NodeId("a"));
  return b.build();
}

}  // namespace depmod::fixtures
