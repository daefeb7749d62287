#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "depmod/graph.hpp"
#include "depmod/metrics.hpp"
#include "depmod/rational.hpp"
#include "depmod/sdp.hpp"

namespace depmod {

/// Relocation of one class from its current package to another.
struct Move {
  NodeId cls;
  PackageId from;
  PackageId to;

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string describe(const Move& mv) {
  return "(" + mv.cls.str() + ", " + mv.from.str() + ", " + mv.to.str() + ")";
}

inline void validate_move(const DependencyGraph& g, const Move& mv) {
  auto idx = g.find(mv.cls);
  if (!idx) throw Error(ErrorKind::InvalidMove, describe(mv) + ": unknown class");
  if (mv.from == mv.to) throw Error(ErrorKind::InvalidMove, describe(mv) + ": source equals destination");
  if (g.package_at(*idx) != mv.from)
    throw Error(ErrorKind::InvalidMove, describe(mv) + ": class is in package '" +
                                            g.package_at(*idx).str() + "'");
}

/// One summand of the modularity sum: A_ij - k_i^out k_j^in / denominator.
struct ContributionTerm {
  std::size_t k_out = 0;
  std::size_t k_in = 0;
  bool present = true;

  friend bool operator==(const ContributionTerm&, const ContributionTerm&) = default;
};

/// Term value with the worked-example denominator 2m: present - k_out k_in / 2m.
inline Rational paper_contribution(const ContributionTerm& t, std::size_t m) {
  return Rational(t.present ? 1 : 0) - null_edge_probability(t.k_out, t.k_in, m);
}

/// Term value with the directed denominator m: present - k_out k_in / m.
inline Rational directed_contribution(const ContributionTerm& t, std::size_t m) {
  return Rational(t.present ? 1 : 0) - directed_null_term(t.k_out, t.k_in, m);
}

/// Unnormalized change in modularity as computed in the worked example:
/// sum of gained terms minus sum of lost terms, each present - k_out k_in / 2m, no 1/m prefactor.
inline Rational delta_q_paper_convention(const std::vector<ContributionTerm>& gained,
                                         const std::vector<ContributionTerm>& lost, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::EmptyGraph, "m = 0");
  Rational total = 0;
  for (const auto& t : gained) total += paper_contribution(t, m);
  for (const auto& t : lost) total -= paper_contribution(t, m);
  return total;
}

struct MoveTerms {
  std::vector<ContributionTerm> gained;  // edges that become intra-package
  std::vector<ContributionTerm> lost;    // edges that stop being intra-package
};

/// Edges incident to the moved class that change intra/inter status, as contribution terms.
inline MoveTerms move_terms(const DependencyGraph& g, const Move& mv) {
  validate_move(g, mv);
  const auto x = g.index_of(mv.cls);
  MoveTerms terms;
  auto classify = [&](DependencyGraph::Index other, ContributionTerm term) {
    const auto& p = g.package_at(other);
    if (p == mv.to) terms.gained.push_back(term);
    else if (p == mv.from) terms.lost.push_back(term);
  };
  for (auto d : g.successors(x)) classify(d, {g.out_degree_at(x), g.in_degree_at(d), true});
  for (auto s : g.predecessors(x)) classify(s, {g.out_degree_at(s), g.in_degree_at(x), true});
  return terms;
}

struct MoveEvaluation {
  Move move;
  Rational q_before;
  Rational q_after;
  Rational delta_q;        // directed convention
  Rational delta_q_paper;  // worked-example convention
  std::size_t violations_suppressed = 0;
};

/// Change in directed modularity from moving node `x` to package `to`, using only the
/// summands in which exactly one endpoint is `x`.
inline Rational delta_q_directed(const DependencyGraph& g, DependencyGraph::Index x,
                                 const PackageId& to) {
  detail::require_edges(g);
  const auto& from = g.package_at(x);
  if (from == to) return 0;
  const auto m = detail::as_i64(g.edge_count());

  std::int64_t edges_to = 0, edges_from = 0;
  for (auto d : g.successors(x)) {
    if (g.package_at(d) == to) ++edges_to;
    else if (g.package_at(d) == from) ++edges_from;
  }
  for (auto s : g.predecessors(x)) {
    if (g.package_at(s) == to) ++edges_to;
    else if (g.package_at(s) == from) ++edges_from;
  }
  std::int64_t out_to = 0, in_to = 0, out_from = 0, in_from = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (i == x) continue;
    if (g.package_at(i) == to) {
      out_to += detail::as_i64(g.out_degree_at(i));
      in_to += detail::as_i64(g.in_degree_at(i));
    } else if (g.package_at(i) == from) {
      out_from += detail::as_i64(g.out_degree_at(i));
      in_from += detail::as_i64(g.in_degree_at(i));
    }
  }
  const auto kout = detail::as_i64(g.out_degree_at(x));
  const auto kin = detail::as_i64(g.in_degree_at(x));
  const std::int64_t null_gain = kout * in_to + out_to * kin;
  const std::int64_t null_loss = kout * in_from + out_from * kin;
  // m^2 dQ = m (edges_to - edges_from) - (null_gain - null_loss)
  return Rational(m * (edges_to - edges_from) - (null_gain - null_loss), m * m);
}

inline MoveEvaluation evaluate_move(const DependencyGraph& g, const Move& mv) {
  validate_move(g, mv);
  detail::require_edges(g);
  const auto x = g.index_of(mv.cls);

  MoveEvaluation ev;
  ev.move = mv;
  ev.q_before = modularity_directed(g, Partition::from_packages(g)).value;
  ev.delta_q = delta_q_directed(g, x, mv.to);
  ev.q_after = ev.q_before + ev.delta_q;

  const auto terms = move_terms(g, mv);
  ev.delta_q_paper = delta_q_paper_convention(terms.gained, terms.lost, g.edge_count());

  for (const auto& f : check_sdp(g)) {
    if (f.severity != Severity::Violation) continue;
    const bool incident = f.edge.src == mv.cls || f.edge.dst == mv.cls;
    const auto& other = f.edge.src == mv.cls ? f.edge.dst : f.edge.src;
    if (incident && g.package_of(other) == mv.to) ++ev.violations_suppressed;
  }
  return ev;
}

enum class PropositionOrdering { SatisfiedLarger, ViolatingLarger, Equal };

inline std::string_view to_string(PropositionOrdering o) {
  switch (o) {
    case PropositionOrdering::SatisfiedLarger: return "satisfied-larger";
    case PropositionOrdering::ViolatingLarger: return "violating-larger";
    case PropositionOrdering::Equal: return "equal";
  }
  return "?";
}

/// (k_i^out, k_j^in) of the pair whose summand is being compared.
struct DegreePair {
  std::size_t k_out = 0;
  std::size_t k_in = 0;
};

/// Compares the directed summand a_ij - k_out k_in / m of an SDP-satisfying pair against
/// the SDP-violating pair obtained by exchanging degree roles.
inline PropositionOrdering proposition_compare(DegreePair satisfied, DegreePair violating,
                                               std::size_t m, bool a_ij) {
  const auto sat = directed_contribution({satisfied.k_out, satisfied.k_in, a_ij}, m);
  const auto viol = directed_contribution({violating.k_out, violating.k_in, a_ij}, m);
  if (viol > sat) return PropositionOrdering::ViolatingLarger;
  if (sat > viol) return PropositionOrdering::SatisfiedLarger;
  return PropositionOrdering::Equal;
}

/// Evaluates every candidate on the unmodified graph; sorted by delta_q descending, then
/// by (class, destination).
inline std::vector<MoveEvaluation> rank_moves(const DependencyGraph& g,
                                              const std::vector<Move>& candidates) {
  for (const auto& mv : candidates) validate_move(g, mv);
  std::vector<MoveEvaluation> out;
  out.reserve(candidates.size());
  for (const auto& mv : candidates) out.push_back(evaluate_move(g, mv));
  std::stable_sort(out.begin(), out.end(), [](const MoveEvaluation& a, const MoveEvaluation& b) {
    if (a.delta_q != b.delta_q) return a.delta_q > b.delta_q;
    if (a.move.cls != b.move.cls) return a.move.cls < b.move.cls;
    return a.move.to < b.move.to;
  });
  return out;
}

}  // namespace depmod
