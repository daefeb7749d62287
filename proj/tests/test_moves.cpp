#include <gtest/gtest.h>

#include <random>

#include "depmod/fixtures.hpp"
#include "depmod/moves.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace depmod;
using test_support::kind_of;

namespace {

const ContributionTerm one_one{1, 1, true};

Rational recomputed_delta(const DependencyGraph& g, const Move& mv) {
  const auto after = g.reassign(mv.cls, mv.to);
  return test_support::naive_directed_modularity(after, Partition::from_packages(after)) -
         test_support::naive_directed_modularity(g, Partition::from_packages(g));
}

}  // namespace

TEST(ExampleConvention, PublishedTermLists) {
  EXPECT_EQ(delta_q_paper_convention({one_one, one_one, one_one, one_one}, {one_one}, 10), Rational(57, 20));
  EXPECT_EQ(delta_q_paper_convention({{4, 4, true}, {1, 4, true}, {1, 4, true}, {1, 4, true}}, {one_one}, 10),
            Rational(33, 20));
  EXPECT_EQ(to_decimal_string(Rational(57, 20)), "2.85");
  EXPECT_EQ(to_decimal_string(Rational(33, 20)), "1.65");
}

TEST(ExampleConvention, CancellationAndErrors) {
  const std::vector<ContributionTerm> terms{{2, 3, true}, {1, 0, false}};
  EXPECT_EQ(delta_q_paper_convention(terms, terms, 7), Rational(0));
  EXPECT_EQ(kind_of([] { (void)delta_q_paper_convention({}, {}, 0); }), ErrorKind::EmptyGraph);
}

TEST(ExampleConvention, FixtureTermsReproducePublishedTotals) {
  for (const auto& ex : {fixtures::condition_a(), fixtures::condition_b()}) {
    const auto published = delta_q_paper_convention(ex.published_gained, ex.published_lost, 10);
    EXPECT_EQ(published, ex.published_delta) << ex.name;
    const auto terms = move_terms(ex.graph, ex.move);
    EXPECT_EQ(delta_q_paper_convention(terms.gained, terms.lost, ex.graph.edge_count()), ex.published_delta)
        << ex.name;
    EXPECT_EQ(ex.graph.edge_count(), 10u);
  }
}

TEST(EvaluateMove, IsolatedNodeHasZeroDelta) {
  const auto g = fixtures::cycle3("P").with_node(NodeId("z"), PackageId("Q"));
  const auto ev = evaluate_move(g, {NodeId("z"), PackageId("Q"), PackageId("P")});
  EXPECT_EQ(ev.delta_q, Rational(0));
  EXPECT_EQ(ev.delta_q_paper, Rational(0));
}

TEST(EvaluateMove, WorkedExampleEdgesSwitch) {
  const auto ex = fixtures::condition_a();
  const auto terms = move_terms(ex.graph, ex.move);
  // (5,1),(6,1),(7,1),(8,1) become intra-package; (1,3) stops being intra-package
  EXPECT_EQ(terms.gained.size(), 4u);
  EXPECT_EQ(terms.lost.size(), 1u);
  const auto ev = evaluate_move(ex.graph, ex.move);
  EXPECT_GT(ev.delta_q, Rational(0));
  EXPECT_EQ(ev.delta_q_paper, Rational(33, 20));
  EXPECT_EQ(ev.violations_suppressed, 0u);

  const auto evb = evaluate_move(fixtures::condition_b().graph, fixtures::condition_b().move);
  EXPECT_EQ(evb.delta_q_paper, Rational(57, 20));
  EXPECT_EQ(evb.violations_suppressed, 1u);
}

// Frozen from the naive full recompute.
TEST(EvaluateMove, DirectedDeltasForWorkedExample) {
  const auto a = fixtures::condition_a();
  const auto b = fixtures::condition_b();
  EXPECT_EQ(recomputed_delta(a.graph, a.move), Rational(1, 10));
  EXPECT_EQ(recomputed_delta(b.graph, b.move), Rational(3, 10));
  EXPECT_EQ(evaluate_move(a.graph, a.move).delta_q, Rational(1, 10));
  EXPECT_EQ(evaluate_move(b.graph, b.move).delta_q, Rational(3, 10));
}

TEST(EvaluateMove, LeavingATriangleLowersModularity) {
  const auto g = fixtures::two_cycles("A", "B");
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const auto from = g.package_at(i);
    const PackageId to(from == PackageId("A") ? "B" : "A");
    const Move mv{g.node(i), from, to};
    EXPECT_LT(recomputed_delta(g, mv), Rational(0));
    EXPECT_LT(evaluate_move(g, mv).delta_q, Rational(0));
  }
}

TEST(EvaluateMove, Errors) {
  const auto g = fixtures::condition_b().graph;
  EXPECT_EQ(kind_of([&] { (void)evaluate_move(g, {NodeId("1"), PackageId("C2"), PackageId("C2")}); }),
            ErrorKind::InvalidMove);
  EXPECT_EQ(kind_of([&] { (void)evaluate_move(g, {NodeId("1"), PackageId("C1"), PackageId("C2")}); }),
            ErrorKind::InvalidMove);
  EXPECT_EQ(kind_of([&] { (void)evaluate_move(g, {NodeId("99"), PackageId("C2"), PackageId("C1")}); }),
            ErrorKind::InvalidMove);
  GraphBuilder b;
  b.add_node(NodeId("a"), PackageId("P")).add_node(NodeId("b"), PackageId("Q"));
  EXPECT_EQ(kind_of([&] { (void)evaluate_move(b.build(), {NodeId("a"), PackageId("P"), PackageId("Q")}); }),
            ErrorKind::EmptyGraph);
}

TEST(EvaluateMoveProperty, IncrementalMatchesRecompute) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = test_support::random_digraph(rng, 3 + trial % 10, 0.3, 3);
    if (g.edge_count() == 0) continue;
    const auto packages = g.packages();
    for (std::size_t i = 0; i < g.node_count(); ++i)
      for (const auto& to : packages) {
        if (to == g.package_at(i)) continue;
        const Move mv{g.node(i), g.package_at(i), to};
        const auto ev = evaluate_move(g, mv);
        EXPECT_EQ(ev.delta_q, recomputed_delta(g, mv));
        EXPECT_EQ(ev.q_after - ev.q_before, ev.delta_q);
      }
  }
}

TEST(EvaluateMoveProperty, ReverseMoveCancels) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test_support::random_digraph(rng, 7, 0.3, 3);
    if (g.edge_count() == 0) continue;
    const auto i = static_cast<std::size_t>(trial) % g.node_count();
    const auto from = g.package_at(i);
    const PackageId to(from == PackageId("P0") ? "P1" : "P0");
    const auto there = evaluate_move(g, {g.node(i), from, to});
    const auto moved = g.reassign(g.node(i), to);
    const auto back = evaluate_move(moved, {g.node(i), to, from});
    EXPECT_EQ(there.delta_q + back.delta_q, Rational(0));
    EXPECT_EQ(back.q_after, there.q_before);
  }
}

TEST(Proposition, Examples) {
  EXPECT_EQ(proposition_compare({3, 3}, {1, 1}, 10, true), PropositionOrdering::ViolatingLarger);
  EXPECT_EQ(directed_contribution({3, 3, true}, 10), Rational(1, 10));
  EXPECT_EQ(directed_contribution({1, 1, true}, 10), Rational(9, 10));
  EXPECT_EQ(proposition_compare({2, 5}, {2, 5}, 20, false), PropositionOrdering::Equal);
  EXPECT_EQ(proposition_compare({1, 1}, {1, 1}, 5, true), PropositionOrdering::Equal);
  EXPECT_EQ(kind_of([] { (void)proposition_compare({1, 1}, {1, 1}, 0, true); }), ErrorKind::EmptyGraph);
}

// Degrees with i_out > i_in and j_out < j_in. The satisfied pair uses (i_out, j_in); the swapped
// scenario substitutes (j_out, i_in).
TEST(PropositionProperty, ViolatingScenarioAlwaysLarger) {
  for (std::size_t i_out = 1; i_out <= 20; ++i_out)
    for (std::size_t i_in = 1; i_in < i_out; ++i_in)
      for (std::size_t j_in = 1; j_in <= 20; ++j_in)
        for (std::size_t j_out = 1; j_out < j_in; ++j_out) {
          const auto max_degree = std::max({i_out, i_in, j_out, j_in});
          for (std::size_t m : {2 * max_degree, 2 * max_degree + 7, std::size_t{100}}) {
            if (m < 2 * max_degree) continue;
            for (bool a : {true, false})
              ASSERT_EQ(proposition_compare({i_out, j_in}, {j_out, i_in}, m, a),
                        PropositionOrdering::ViolatingLarger)
                  << i_out << ' ' << i_in << ' ' << j_out << ' ' << j_in << ' ' << m;
          }
        }
}

TEST(RankMoves, EmptyAndSingle) {
  const auto g = fixtures::condition_b().graph;
  EXPECT_TRUE(rank_moves(g, {}).empty());
  const auto ranked = rank_moves(g, {fixtures::condition_b().move});
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].delta_q, evaluate_move(g, fixtures::condition_b().move).delta_q);
}

TEST(RankMoves, ConditionBOutranksConditionA) {
  const auto a = evaluate_move(fixtures::condition_a().graph, fixtures::condition_a().move);
  const auto b = evaluate_move(fixtures::condition_b().graph, fixtures::condition_b().move);
  EXPECT_GT(b.delta_q_paper, a.delta_q_paper);
}

TEST(RankMoves, InvalidCandidateNamed) {
  const auto g = fixtures::condition_b().graph;
  try {
    (void)rank_moves(g, {fixtures::condition_b().move, {NodeId("7"), PackageId("C2"), PackageId("C1")}});
    FAIL() << "expected InvalidMove";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidMove);
    EXPECT_NE(std::string(e.what()).find("(7, C2, C1)"), std::string::npos);
  }
}

TEST(RankMovesProperty, SortedDeterministicAndPure) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = test_support::random_digraph(rng, 8, 0.3, 3);
    if (g.edge_count() == 0) continue;
    std::vector<Move> candidates;
    for (std::size_t i = 0; i < g.node_count(); ++i)
      for (const auto& p : g.packages())
        if (p != g.package_at(i)) candidates.push_back({g.node(i), g.package_at(i), p});
    const auto copy = g;
    const auto first = rank_moves(g, candidates);
    std::reverse(candidates.begin(), candidates.end());
    const auto second = rank_moves(g, candidates);
    EXPECT_EQ(g, copy);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
      EXPECT_EQ(first[k].move, second[k].move);
      if (k > 0) {
        EXPECT_GE(first[k - 1].delta_q, first[k].delta_q);
        if (first[k - 1].delta_q == first[k].delta_q) {
          EXPECT_LT(std::tie(first[k - 1].move.cls, first[k - 1].move.to),
                    std::tie(first[k].move.cls, first[k].move.to));
        }
      }
    }
  }
}
