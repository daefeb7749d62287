#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "depmod/graph.hpp"
#include "depmod/metrics.hpp"
#include "depmod/moves.hpp"
#include "depmod/rational.hpp"

namespace depmod {

struct RewireConfig {
  std::uint64_t swap_multiplier = 10;  // attempted swaps = swap_multiplier * m (mixing heuristic)
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;

  void validate() const {
    if (swap_multiplier < 1) throw Error(ErrorKind::BadArgument, "swap_multiplier must be >= 1");
    if (samples < 1) throw Error(ErrorKind::BadArgument, "samples must be >= 1");
  }
};

struct PairFrequency {
  NodeId src;
  NodeId dst;
  Rational observed;
  Rational predicted;
  bool saturated = false;  // predicted expectation exceeds 1
};

struct ValidationSummary {
  std::string kind;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  Rational max_abs_error = 0;
  std::vector<PairFrequency> pairs;
};

namespace detail {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::uint64_t edge_key(std::size_t s, std::size_t d) {
  return (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint64_t>(d);
}

/// Degree-preserving double edge swaps on a simple digraph given as an edge list.
/// (a,b),(c,d) -> (a,d),(c,b), rejected when that creates a self-loop or duplicate.
inline void rewire_edges(EdgeList& edges, std::uint64_t attempts, std::uint64_t seed) {
  if (edges.size() < 2) return;
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (auto [s, d] : edges) present.insert(edge_key(s, d));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (std::uint64_t t = 0; t < attempts; ++t) {
    const auto x = pick(rng);
    const auto y = pick(rng);
    if (x == y) continue;
    auto [a, b] = edges[x];
    auto [c, d] = edges[y];
    if (a == d || c == b) continue;
    if (present.contains(edge_key(a, d)) || present.contains(edge_key(c, b))) continue;
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(edge_key(a, d));
    present.insert(edge_key(c, b));
    edges[x] = {a, d};
    edges[y] = {c, b};
  }
}

inline bool same_degrees_and_simple(const DependencyGraph& g, const EdgeList& edges) {
  std::vector<std::size_t> out(g.node_count(), 0), in(g.node_count(), 0);
  std::unordered_set<std::uint64_t> seen;
  for (auto [s, d] : edges) {
    if (s == d || !seen.insert(edge_key(s, d)).second) return false;
    ++out[s];
    ++in[d];
  }
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (out[i] != g.out_degree_at(i) || in[i] != g.in_degree_at(i)) return false;
  return true;
}

inline DependencyGraph with_edges(const DependencyGraph& g, const EdgeList& edges) {
  GraphBuilder b;
  for (std::size_t i = 0; i < g.node_count(); ++i) b.add_node(g.node(i), g.package_at(i));
  for (auto [s, d] : edges) b.add_edge(g.node(s), g.node(d));
  return b.build();
}

inline std::size_t worker_count(std::uint64_t jobs) {
  const auto hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<std::size_t>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(jobs, 1)));
}

}  // namespace detail

/// Randomizes edges while keeping every node's in- and out-degree and the package assignment.
/// A graph with a single edge has no legal swap and comes back unchanged.
inline DependencyGraph rewire(const DependencyGraph& g, const RewireConfig& cfg) {
  cfg.validate();
  if (g.edge_count() == 0) throw Error(ErrorKind::TooFewEdges, "graph has no edges to rewire");
  auto edges = g.edge_indices();
  detail::rewire_edges(edges, cfg.swap_multiplier * g.edge_count(), cfg.seed);
  return detail::with_edges(g, edges);
}

/// Rewires `g` cfg.samples times (sample t seeded with seed + t) and compares how often each
/// ordered pair i != j is an edge against k_i^out k_j^in / m. Pairs whose prediction exceeds 1
/// are reported as saturated and left out of max_abs_error. A trial succeeds when its rewired
/// graph kept every degree and stayed simple.
inline ValidationSummary validate_null_probability(const DependencyGraph& g, const RewireConfig& cfg) {
  cfg.validate();
  if (g.edge_count() == 0) throw Error(ErrorKind::TooFewEdges, "graph has no edges to rewire");
  const auto n = g.node_count();
  const auto m = g.edge_count();
  const auto base = g.edge_indices();
  const auto attempts = cfg.swap_multiplier * m;

  struct Partial {
    std::vector<std::uint64_t> counts;
    std::uint64_t preserved = 0;
  };
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    Partial p{std::vector<std::uint64_t>(n * n, 0), 0};
    for (std::uint64_t t = begin; t < end; ++t) {
      auto edges = base;
      detail::rewire_edges(edges, attempts, cfg.seed + t);
      if (detail::same_degrees_and_simple(g, edges)) ++p.preserved;
      for (auto [s, d] : edges) ++p.counts[s * n + d];
    }
    return p;
  };

  const auto workers = detail::worker_count(cfg.samples);
  std::vector<std::future<Partial>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    const auto begin = cfg.samples * w / workers;
    const auto end = cfg.samples * (w + 1) / workers;
    futures.push_back(std::async(std::launch::async, run, begin, end));
  }
  std::vector<std::uint64_t> counts(n * n, 0);
  ValidationSummary summary;
  summary.kind = "null-probability";
  summary.trials = cfg.samples;
  for (auto& f : futures) {
    auto p = f.get();
    summary.successes += p.preserved;
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += p.counts[k];
  }

  const auto samples = static_cast<std::int64_t>(cfg.samples);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      PairFrequency pf{g.node(i), g.node(j),
                       Rational(static_cast<std::int64_t>(counts[i * n + j]), samples),
                       directed_null_term(g.out_degree_at(i), g.in_degree_at(j), m), false};
      pf.saturated = pf.predicted > 1;
      if (!pf.saturated) {
        const auto err = abs(pf.observed - pf.predicted);
        if (err > summary.max_abs_error) summary.max_abs_error = err;
      }
      summary.pairs.push_back(std::move(pf));
    }
  }
  return summary;
}

struct PropositionTrial {
  std::size_t m = 0;
  std::size_t i_out = 0, i_in = 0, j_out = 0, j_in = 0;
};

/// Degrees satisfying the remark-1 strict inequalities: i_out > i_in >= 1, 1 <= j_out < j_in <= 20.
/// m is uniform in [5, 100].
inline PropositionTrial sample_proposition_trial(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  PropositionTrial t;
  t.m = uniform(5, 100);
  t.i_in = uniform(1, 19);
  t.i_out = uniform(t.i_in + 1, 20);
  t.j_out = uniform(1, 19);
  t.j_in = uniform(t.j_out + 1, 20);
  return t;
}

/// Samples remark-1 degree configurations and checks that the summand with exchanged degree
/// roles (k_i^out -> k_j^out, k_j^in -> k_i^in) is strictly larger. Trial t uses seed + t.
inline ValidationSummary validate_proposition(const RewireConfig& cfg) {
  cfg.validate();
  ValidationSummary summary;
  summary.kind = "proposition";
  summary.trials = cfg.samples;
  for (std::uint64_t t = 0; t < cfg.samples; ++t) {
    const auto trial = sample_proposition_trial(cfg.seed + t);
    const auto ordering = proposition_compare({trial.i_out, trial.j_in}, {trial.j_out, trial.i_in},
                                              trial.m, true);
    if (ordering == PropositionOrdering::ViolatingLarger) ++summary.successes;
  }
  return summary;
}

}  // namespace depmod
