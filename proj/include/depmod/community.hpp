#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "depmod/graph.hpp"
#include "depmod/metrics.hpp"
#include "depmod/moves.hpp"
#include "depmod/rational.hpp"

namespace depmod {

struct Merge {
  std::string first;
  std::string second;
  Rational delta_q;
};

struct SuggestionReport {
  Rational initial_q;
  Rational final_q;
  std::vector<Merge> merges;
  std::vector<Move> moves;
};

/// Maps each suggested community onto a package and lists the classes that would have to move.
///
/// Communities claim packages in order of their largest overlap (ties: community with the
/// smaller first member). A community takes the unclaimed package holding most of its members
/// (ties: smaller package id). A community left without an overlapping unclaimed package gets
/// a fresh package id "<plurality package>.split<k>", so distinct communities always end up in
/// distinct packages. Moves are sorted by class id.
inline std::vector<Move> partition_to_moves(const DependencyGraph& g, const Partition& suggested) {
  const auto groups = groups_of(g, suggested);

  struct Candidate {
    std::size_t group;
    std::vector<std::pair<PackageId, std::size_t>> overlap;  // best first
  };
  std::vector<Candidate> candidates;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    std::map<PackageId, std::size_t> counts;
    for (const auto& n : groups[c]) ++counts[g.package_of(n)];
    Candidate cand{c, {counts.begin(), counts.end()}};
    std::stable_sort(cand.overlap.begin(), cand.overlap.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    candidates.push_back(std::move(cand));
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return a.overlap.front().second > b.overlap.front().second;
  });

  std::set<PackageId> taken;
  std::set<PackageId> existing;
  for (const auto& p : g.packages()) existing.insert(p);
  std::vector<PackageId> target(groups.size());
  for (const auto& cand : candidates) {
    bool assigned = false;
    for (const auto& [pkg, count] : cand.overlap) {
      if (!taken.contains(pkg)) {
        target[cand.group] = pkg;
        taken.insert(pkg);
        assigned = true;
        break;
      }
    }
    if (assigned) continue;
    const auto& base = cand.overlap.front().first.str();
    for (std::size_t k = 1;; ++k) {
      PackageId fresh(base + ".split" + std::to_string(k));
      if (!existing.contains(fresh) && !taken.contains(fresh)) {
        target[cand.group] = fresh;
        taken.insert(fresh);
        break;
      }
    }
  }

  std::vector<Move> moves;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (const auto& n : groups[c]) {
      const auto& current = g.package_of(n);
      if (current != target[c]) moves.push_back({n, current, target[c]});
    }
  }
  std::sort(moves.begin(), moves.end(),
            [](const Move& a, const Move& b) { return a.cls < b.cls; });
  return moves;
}

/// Greedy agglomerative maximization of directed modularity.
///
/// Starts from singletons. Each step merges the pair with the largest gain; ties go to the
/// lexicographically smallest (label, label) pair, where a community's label is its smallest
/// member id. A merge is accepted iff the gain is positive, or zero with at least one edge
/// between the pair. Pairs without edges between them can never have a positive gain, so only
/// connected pairs are scanned.
inline std::pair<Partition, SuggestionReport> greedy_partition(const DependencyGraph& g) {
  detail::require_edges(g);
  const auto n = g.node_count();
  const auto m = detail::as_i64(g.edge_count());

  // community state, indexed by the community's smallest member
  std::vector<bool> alive(n, true);
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<std::int64_t> out_vol(n), in_vol(n);
  // links[a][b] = edges between a and b in either direction; symmetric
  std::vector<std::map<std::size_t, std::int64_t>> links(n);
  for (std::size_t i = 0; i < n; ++i) {
    members[i] = {i};
    out_vol[i] = detail::as_i64(g.out_degree_at(i));
    in_vol[i] = detail::as_i64(g.in_degree_at(i));
  }
  for (auto [s, d] : g.edge_indices()) {
    ++links[s][d];
    ++links[d][s];
  }

  // index order is NodeId order, so comparing indices compares labels
  auto label = [&](std::size_t c) { return g.node(c).str(); };

  SuggestionReport report;
  report.initial_q = modularity_directed(g, Partition::singletons(g)).value;
  Rational q = report.initial_q;

  while (true) {
    bool found = false;
    std::int64_t best_gain = 0;
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (std::size_t a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      for (const auto& [b, e] : links[a]) {
        if (b <= a) continue;
        // m^2 dQ for merging a and b
        const auto gain = m * e - (out_vol[a] * in_vol[b] + out_vol[b] * in_vol[a]);
        if (gain < 0) continue;
        // scanning (a, b) in ascending order keeps the first maximum, the smallest pair
        if (!found || gain > best_gain) {
          found = true;
          best_gain = gain;
          best = {a, b};
        }
      }
    }
    if (!found) break;

    auto [a, b] = best;
    const Rational dq(best_gain, m * m);
    report.merges.push_back({label(a), label(b), dq});
    q += dq;

    members[a].insert(members[a].end(), members[b].begin(), members[b].end());
    std::sort(members[a].begin(), members[a].end());
    members[b].clear();
    out_vol[a] += out_vol[b];
    in_vol[a] += in_vol[b];
    alive[b] = false;
    for (const auto& [c, e] : links[b]) {
      if (c == a) continue;
      links[a][c] += e;
      links[c].erase(b);
      links[c][a] += e;
    }
    links[a].erase(b);
    links[b].clear();
  }

  std::map<NodeId, std::string> labels;
  for (std::size_t c = 0; c < n; ++c) {
    if (!alive[c]) continue;
    for (auto i : members[c]) labels.emplace(g.node(i), label(c));
  }
  Partition part(std::move(labels));
  report.final_q = q;
  report.moves = partition_to_moves(g, part);
  return {std::move(part), std::move(report)};
}

}  // namespace depmod
