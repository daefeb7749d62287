#include <gtest/gtest.h>

#include <random>

#include "depmod/fixtures.hpp"
#include "depmod/null_model.hpp"
#include "support/curated.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace depmod;
using test_support::kind_of;

namespace {

bool degrees_match(const DependencyGraph& a, const DependencyGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    if (a.node(i) != b.node(i) || a.package_at(i) != b.package_at(i)) return false;
    if (a.out_degree_at(i) != b.out_degree_at(i) || a.in_degree_at(i) != b.in_degree_at(i)) return false;
  }
  return true;
}

}  // namespace

TEST(Rewire, SingleEdgeUnchanged) {
  const auto g = test_support::from_edges({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(rewire(g, {}), g);
}

TEST(Rewire, Errors) {
  GraphBuilder b;
  b.add_node(NodeId("a"), PackageId("P"));
  EXPECT_EQ(kind_of([&] { (void)rewire(b.build(), {}); }), ErrorKind::TooFewEdges);
  EXPECT_EQ(kind_of([] { (void)rewire(fixtures::cycle3(), {0, 1, 1}); }), ErrorKind::BadArgument);
  EXPECT_EQ(kind_of([] { (void)validate_null_probability(fixtures::cycle3(), {10, 1, 0}); }), ErrorKind::BadArgument);
}

TEST(Rewire, SeededDeterminism) {
  std::mt19937_64 rng(67);
  const auto g = test_support::random_digraph(rng, 12, 0.25);
  const RewireConfig cfg{10, 1234, 1};
  EXPECT_EQ(rewire(g, cfg), rewire(g, cfg));
  bool any_different = false;
  for (std::uint64_t s = 0; s < 10; ++s) any_different |= !(rewire(g, {10, s, 1}) == g);
  EXPECT_TRUE(any_different);
}

TEST(RewireProperty, PreservesDegreesAndSimplicity) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = test_support::random_digraph(rng, 2 + trial % 12, 0.3, 3);
    if (g.edge_count() == 0) continue;
    const auto r = rewire(g, {1 + static_cast<std::uint64_t>(trial % 5), static_cast<std::uint64_t>(trial), 1});
    EXPECT_TRUE(degrees_match(g, r));
  }
}

TEST(NullProbability, ZeroOutDegreeNeverObserved) {
  const auto g = test_support::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "a"}});
  const auto summary = validate_null_probability(g, {10, 5, 500});
  EXPECT_EQ(summary.trials, 500u);
  EXPECT_EQ(summary.successes, 500u);
  for (const auto& pf : summary.pairs) {
    if (pf.src == NodeId("d")) {
      EXPECT_EQ(pf.observed, Rational(0));
    }
  }
}

TEST(NullProbability, ThreeCyclePredictionAndTable) {
  const auto summary = validate_null_probability(fixtures::cycle3(), {10, 0, 1000});
  ASSERT_EQ(summary.pairs.size(), 6u);
  for (const auto& pf : summary.pairs) {
    EXPECT_EQ(pf.predicted, Rational(1, 3));
    EXPECT_FALSE(pf.saturated);
    EXPECT_NE(pf.src, pf.dst);
  }
  // the directed 3-cycle admits no degree-preserving swap, so every sample is the input
  for (const auto& pf : summary.pairs)
    EXPECT_EQ(pf.observed, fixtures::cycle3().has_edge(pf.src, pf.dst) ? Rational(1) : Rational(0));
  EXPECT_EQ(summary.max_abs_error, Rational(2, 3));
}

TEST(NullProbability, HighDegreePairSaturated) {
  const auto ex = fixtures::condition_a();
  const auto summary = validate_null_probability(ex.graph, {10, 3, 200});
  ASSERT_EQ(ex.graph.edge_count(), 10u);
  bool saw = false;
  for (const auto& pf : summary.pairs) {
    EXPECT_EQ(pf.saturated, pf.predicted > 1);
    saw |= pf.saturated;
  }
  EXPECT_TRUE(saw);
}

TEST(NullProbabilityProperty, SeededDeterminismAndErrorShrinks) {
  std::mt19937_64 rng(73);
  const auto g = test_support::random_digraph(rng, 10, 0.2);
  const auto a = validate_null_probability(g, {10, 99, 300});
  const auto b = validate_null_probability(g, {10, 99, 300});
  EXPECT_EQ(a.max_abs_error, b.max_abs_error);
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t k = 0; k < a.pairs.size(); ++k) EXPECT_EQ(a.pairs[k].observed, b.pairs[k].observed);

  const auto small = validate_null_probability(g, {10, 7, 100});
  const auto large = validate_null_probability(g, {10, 7, 10000});
  EXPECT_LT(large.max_abs_error, small.max_abs_error);
  EXPECT_EQ(large.successes, large.trials);
}

TEST(Proposition, SingleTrialShape) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto t = sample_proposition_trial(s);
    EXPECT_GE(t.m, 5u);
    EXPECT_LE(t.m, 100u);
    EXPECT_GT(t.i_out, t.i_in);
    EXPECT_GE(t.i_in, 1u);
    EXPECT_LT(t.j_out, t.j_in);
    EXPECT_GE(t.j_out, 1u);
    EXPECT_LE(std::max(t.i_out, t.j_in), 20u);
    // strict inequalities rule out equal products
    EXPECT_NE(t.i_out * t.j_in, t.j_out * t.i_in);
  }
}

TEST(Proposition, AllTrialsSucceed) {
  for (std::uint64_t seed : {0u, 1u, 42u, 2024u, 99991u}) {
    const auto summary = validate_proposition({10, seed, 10000});
    EXPECT_EQ(summary.trials, 10000u);
    EXPECT_EQ(summary.successes, 10000u);
  }
}
