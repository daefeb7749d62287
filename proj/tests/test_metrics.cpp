#include <gtest/gtest.h>

#include <random>

#include "depmod/fixtures.hpp"
#include "depmod/metrics.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace depmod;
using test_support::kind_of;

namespace {

// Three external classes each depend on one class in X; X has no outgoing cross edges.
DependencyGraph stable_x() {
  GraphBuilder b;
  b.add_node(NodeId("x1"), PackageId("X")).add_node(NodeId("x2"), PackageId("X"));
  for (const char* n : {"a", "b", "c"}) b.add_node(NodeId(n), PackageId("Other"));
  b.add_edge(NodeId("a"), NodeId("x1")).add_edge(NodeId("b"), NodeId("x2")).add_edge(NodeId("c"), NodeId("x1"));
  b.add_edge(NodeId("x1"), NodeId("x2"));
  return b.build();
}

// One class in Y depends on three external classes; nothing depends on Y.
DependencyGraph unstable_y() {
  GraphBuilder b;
  b.add_node(NodeId("y1"), PackageId("Y")).add_node(NodeId("y2"), PackageId("Y"));
  for (const char* n : {"a", "b", "c"}) b.add_node(NodeId(n), PackageId("Other"));
  for (const char* n : {"a", "b", "c"}) b.add_edge(NodeId("y1"), NodeId(n));
  b.add_edge(NodeId("y2"), NodeId("y1"));
  return b.build();
}

DependencyGraph two_triangles_undirected() { return fixtures::two_cycles("T1", "T2"); }

}  // namespace

TEST(Couplings, StablePackageShape) {
  EXPECT_EQ(coupling_counts(stable_x(), PackageId("X")), (Couplings{3, 0}));
}

TEST(Couplings, UnstablePackageCountsClassesNotEdges) {
  EXPECT_EQ(coupling_counts(unstable_y(), PackageId("Y")), (Couplings{0, 1}));
  EXPECT_EQ(coupling_counts(unstable_y(), PackageId("Y"), CouplingMode::Edges), (Couplings{0, 3}));
}

TEST(Couplings, InternalOnlyPackage) {
  EXPECT_EQ(coupling_counts(fixtures::cycle3("P"), PackageId("P")), (Couplings{0, 0}));
}

TEST(Couplings, UnknownPackage) {
  EXPECT_EQ(kind_of([] { (void)coupling_counts(stable_x(), PackageId("Nope")); }), ErrorKind::UnknownPackage);
  EXPECT_EQ(kind_of([] { (void)instability(stable_x(), PackageId("Nope")); }), ErrorKind::UnknownPackage);
}

TEST(Instability, BoundaryValues) {
  EXPECT_EQ(Instability::from_counts(3, 0).value(), Rational(0));
  EXPECT_EQ(Instability::from_counts(0, 2).value(), Rational(1));
  EXPECT_EQ(Instability::from_counts(2, 2).value(), Rational(1, 2));
  EXPECT_FALSE(Instability::from_counts(0, 0).defined());
  EXPECT_EQ(Instability::from_counts(0, 0).str(), "n/a");
  EXPECT_EQ(instability(stable_x(), PackageId("X")).value(), Rational(0));
  EXPECT_EQ(instability(unstable_y(), PackageId("Y")).value(), Rational(1));
}

TEST(Instability, InvariantUnderInternalEdges) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = test_support::random_digraph(rng, 9, 0.25, 3);
    for (const auto& p : g.packages()) {
      const auto before = instability(g, p);
      auto b = GraphBuilder(g);
      const auto members = g.members(p);
      for (auto s : members)
        for (auto d : members)
          if (s != d && !g.has_edge_at(s, d)) b.add_edge(g.node(s), g.node(d));
      EXPECT_EQ(instability(b.build(), p), before);
    }
  }
}

TEST(IntraFraction, AllInOneCommunity) {
  const auto g = stable_x();
  EXPECT_EQ(intra_community_fraction(g, Partition::single(g)), Rational(1));
}

TEST(IntraFraction, AllCrossing) {
  const auto g = unstable_y();
  std::map<NodeId, std::string> labels;
  for (const auto& n : g.nodes()) labels.emplace(n, n.str());
  EXPECT_EQ(intra_community_fraction(g, Partition(labels)), Rational(0));
}

TEST(IntraFraction, TwoTriangles) {
  const auto g = two_triangles_undirected();
  EXPECT_EQ(intra_community_fraction(g, Partition::from_packages(g)), Rational(1));
  EXPECT_EQ(kind_of([] { (void)intra_community_fraction(DependencyGraph{}, Partition{}); }), ErrorKind::EmptyGraph);
}

// Both written forms of the intra-community fraction agree: on the symmetrized adjacency,
// sum(A delta) / sum(A) equals (1/2m) sum(A delta); and for graphs without reciprocal edges
// the directed fraction equals the symmetric one.
TEST(IntraFractionProperty, WrittenFormsAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test_support::random_oriented_graph(rng, 4 + trial % 9, 0.35);
    if (g.edge_count() == 0) continue;
    const auto part = test_support::random_partition(rng, g, 3);
    auto a = test_support::adjacency(g);
    const auto labels = test_support::labels_by_index(g, part);
    std::int64_t sum_a = 0, sum_a_delta = 0;
    for (std::size_t v = 0; v < a.size(); ++v)
      for (std::size_t w = 0; w < a.size(); ++w) {
        const int sym = a[v][w] | a[w][v];
        sum_a += sym;
        if (labels[v] == labels[w]) sum_a_delta += sym;
      }
    const std::int64_t m = sum_a / 2;
    EXPECT_EQ(sum_a, 2 * m);
    EXPECT_EQ(Rational(sum_a_delta, sum_a), Rational(sum_a_delta, 2 * m));
    EXPECT_EQ(intra_community_fraction(g, part), Rational(sum_a_delta, sum_a));
  }
}

TEST(NullProbability, WorkedExampleTerms) {
  EXPECT_EQ(null_edge_probability(4, 4, 10), Rational(4, 5));
  EXPECT_EQ(null_edge_probability(1, 1, 10), Rational(1, 20));
  EXPECT_EQ(null_edge_probability(0, 7, 10), Rational(0));
  EXPECT_EQ(kind_of([] { (void)null_edge_probability(1, 1, 0); }), ErrorKind::EmptyGraph);
}

TEST(NullProbabilityProperty, ExpectedOutDegreePreserved) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = test_support::random_digraph(rng, 8, 0.3);
    if (g.edge_count() == 0) continue;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      Rational total = 0;
      for (std::size_t j = 0; j < g.node_count(); ++j)
        total += directed_null_term(g.out_degree_at(i), g.in_degree_at(j), g.edge_count());
      EXPECT_EQ(total, Rational(static_cast<std::int64_t>(g.out_degree_at(i))));
    }
  }
}

TEST(ModularityUndirected, SingleCommunityIsZero) {
  const auto g = stable_x();
  EXPECT_EQ(modularity_undirected(g, Partition::single(g)).value, Rational(0));
}

// Frozen from test_support::naive_undirected_modularity.
TEST(ModularityUndirected, TwoTrianglesAndSingletonTriangle) {
  const auto g = two_triangles_undirected();
  EXPECT_EQ(test_support::naive_undirected_modularity(g, Partition::from_packages(g)), Rational(1, 2));
  EXPECT_EQ(modularity_undirected(g, Partition::from_packages(g)).value, Rational(1, 2));

  const auto tri = fixtures::cycle3();
  EXPECT_EQ(test_support::naive_undirected_modularity(tri, Partition::singletons(tri)), Rational(-1, 3));
  EXPECT_EQ(modularity_undirected(tri, Partition::singletons(tri)).value, Rational(-1, 3));
}

TEST(ModularityUndirected, ReciprocalPairCountsOnce) {
  GraphBuilder b;
  b.add_node(NodeId("a"), PackageId("P")).add_node(NodeId("b"), PackageId("P")).add_node(NodeId("c"), PackageId("Q"));
  b.add_edge(NodeId("a"), NodeId("b")).add_edge(NodeId("b"), NodeId("a")).add_edge(NodeId("b"), NodeId("c"));
  const auto g = b.build();
  const auto part = Partition::from_packages(g);
  // undirected edges {a,b}, {b,c}: 2m = 4, intra sum counts a-b twice, volumes 3 and 1
  EXPECT_EQ(modularity_undirected(g, part).value, test_support::naive_undirected_modularity(g, part));
  EXPECT_EQ(modularity_undirected(g, part).value, Rational(4 * 2 - 9 - 1, 16));
}

TEST(ModularityDirected, SingleCommunityIsZero) {
  const auto g = unstable_y();
  EXPECT_EQ(modularity_directed(g, Partition::single(g)).value, Rational(0));
}

// Frozen from test_support::naive_directed_modularity.
TEST(ModularityDirected, CycleValues) {
  const auto c3 = fixtures::cycle3();
  EXPECT_EQ(test_support::naive_directed_modularity(c3, Partition::singletons(c3)), Rational(-1, 3));
  EXPECT_EQ(modularity_directed(c3, Partition::singletons(c3)).value, Rational(-1, 3));

  const auto two = fixtures::two_cycles("A", "B");
  EXPECT_EQ(test_support::naive_directed_modularity(two, Partition::from_packages(two)), Rational(1, 2));
  EXPECT_EQ(modularity_directed(two, Partition::from_packages(two)).value, Rational(1, 2));
}

TEST(ModularityDirected, EmptyGraphAndIncompletePartition) {
  EXPECT_EQ(kind_of([] { (void)modularity_directed(DependencyGraph{}, Partition{}); }), ErrorKind::EmptyGraph);
  EXPECT_EQ(kind_of([] { (void)modularity_undirected(DependencyGraph{}, Partition{}); }), ErrorKind::EmptyGraph);
  const auto g = fixtures::cycle3();
  EXPECT_EQ(kind_of([&] { (void)modularity_directed(g, Partition({{NodeId("a"), "x"}})); }),
            ErrorKind::IncompletePartition);
}

TEST(ModularityProperty, MatchesNaiveAndBounds) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = test_support::random_digraph(rng, 3 + trial % 8, 0.3);
    if (g.edge_count() == 0) continue;
    const auto part = test_support::random_partition(rng, g, 1 + trial % 4);
    const auto qd = modularity_directed(g, part).value;
    const auto qu = modularity_undirected(g, part).value;
    EXPECT_EQ(qd, test_support::naive_directed_modularity(g, part));
    EXPECT_EQ(qu, test_support::naive_undirected_modularity(g, part));
    EXPECT_LE(qd, Rational(1));
    EXPECT_LE(qu, Rational(1));
    EXPECT_LE(modularity_directed(g, Partition::singletons(g)).value, Rational(0));
  }
}

TEST(PackageReport, Shapes) {
  EXPECT_TRUE(package_report(DependencyGraph{}).empty());

  const auto report = package_report(fixtures::condition_b().graph);
  ASSERT_EQ(report.size(), 2u);
  EXPECT_EQ(report[0].package, PackageId("C1"));
  EXPECT_EQ(report[1].package, PackageId("C2"));

  const auto g = stable_x().with_node(NodeId("lonely"), PackageId("Island"));
  const auto rows = package_report(g);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].package, PackageId("Island"));
  EXPECT_FALSE(rows[0].instability.defined());
  for (const auto& row : rows) {
    EXPECT_EQ(row.instability, instability(g, row.package));
    EXPECT_EQ(row.border_nodes, border_nodes(g, row.package));
  }
}
