#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "depmod/graph.hpp"
#include "depmod/rational.hpp"

namespace depmod {

/// Ce / (Ca + Ce), or Undefined when the package has no cross-package coupling at all.
class Instability {
 public:
  Instability() = default;  // Undefined
  explicit Instability(Rational value) : value_(value) {}

  static Instability undefined() { return {}; }

  static Instability from_counts(std::size_t ca, std::size_t ce) {
    if (ca + ce == 0) return undefined();
    return Instability(Rational(static_cast<std::int64_t>(ce), static_cast<std::int64_t>(ca + ce)));
  }

  bool defined() const noexcept { return value_.has_value(); }
  const Rational& value() const { return value_.value(); }

  /// "n/a" when undefined.
  std::string str() const { return value_ ? to_string(*value_) : "n/a"; }

  friend bool operator==(const Instability&, const Instability&) = default;

 private:
  std::optional<Rational> value_;
};

/// Default counts distinct classes; Edges counts cross-package edges instead.
enum class CouplingMode { Classes, Edges };

struct Couplings {
  std::size_t ca = 0;
  std::size_t ce = 0;
  friend bool operator==(const Couplings&, const Couplings&) = default;
};

inline Couplings coupling_counts(const DependencyGraph& g, const PackageId& p,
                                 CouplingMode mode = CouplingMode::Classes) {
  const auto members = g.members(p);
  Couplings c;
  std::set<DependencyGraph::Index> afferent;
  for (auto i : members) {
    std::size_t outgoing = 0;
    for (auto d : g.successors(i))
      if (g.package_at(d) != p) ++outgoing;
    for (auto s : g.predecessors(i)) {
      if (g.package_at(s) == p) continue;
      if (mode == CouplingMode::Edges) ++c.ca;
      else afferent.insert(s);
    }
    if (mode == CouplingMode::Edges) c.ce += outgoing;
    else if (outgoing > 0) ++c.ce;
  }
  if (mode == CouplingMode::Classes) c.ca = afferent.size();
  return c;
}

inline Instability instability(const DependencyGraph& g, const PackageId& p,
                               CouplingMode mode = CouplingMode::Classes) {
  auto c = coupling_counts(g, p, mode);
  return Instability::from_counts(c.ca, c.ce);
}

/// Members of `p` with at least one edge, in either direction, to a node outside `p`.
inline std::set<NodeId> border_nodes(const DependencyGraph& g, const PackageId& p) {
  std::set<NodeId> out;
  for (auto i : g.members(p)) {
    bool crosses = false;
    for (auto d : g.successors(i)) crosses = crosses || g.package_at(d) != p;
    for (auto s : g.predecessors(i)) crosses = crosses || g.package_at(s) != p;
    if (crosses) out.insert(g.node(i));
  }
  return out;
}

inline bool is_border_node(const DependencyGraph& g, DependencyGraph::Index i) {
  const auto& p = g.package_at(i);
  for (auto d : g.successors(i))
    if (g.package_at(d) != p) return true;
  for (auto s : g.predecessors(i))
    if (g.package_at(s) != p) return true;
  return false;
}

struct PackageMetrics {
  PackageId package;
  std::size_t ca = 0;
  std::size_t ce = 0;
  Instability instability;
  std::set<NodeId> border_nodes;
};

/// One entry per package, in PackageId order.
inline std::vector<PackageMetrics> package_report(const DependencyGraph& g,
                                                  CouplingMode mode = CouplingMode::Classes) {
  std::vector<PackageMetrics> out;
  for (const auto& p : g.packages()) {
    auto c = coupling_counts(g, p, mode);
    out.push_back({p, c.ca, c.ce, Instability::from_counts(c.ca, c.ce), border_nodes(g, p)});
  }
  return out;
}

namespace detail {

inline void require_edges(const DependencyGraph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no edges");
}

inline std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

/// Fraction of directed edges whose endpoints share a community.
inline Rational intra_community_fraction(const DependencyGraph& g, const Partition& part) {
  detail::require_edges(g);
  const auto community = part.dense(g);
  std::size_t intra = 0;
  for (auto [s, d] : g.edge_indices())
    if (community[s] == community[d]) ++intra;
  return Rational(detail::as_i64(intra), detail::as_i64(g.edge_count()));
}

/// Expected number of edges between two vertices under the configuration model: k_v k_w / 2m.
inline Rational null_edge_probability(std::size_t k_v, std::size_t k_w, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::EmptyGraph, "m = 0");
  return Rational(detail::as_i64(k_v * k_w), detail::as_i64(2 * m));
}

/// Directed null-model term k_i^out k_j^in / m.
inline Rational directed_null_term(std::size_t k_out, std::size_t k_in, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::EmptyGraph, "m = 0");
  return Rational(detail::as_i64(k_out * k_in), detail::as_i64(m));
}

enum class ModularityConvention { UndirectedEq4, DirectedEq5, PaperExample };

inline std::string_view to_string(ModularityConvention c) {
  switch (c) {
    case ModularityConvention::UndirectedEq4: return "undirected";
    case ModularityConvention::DirectedEq5: return "directed";
    case ModularityConvention::PaperExample: return "paper-example";
  }
  return "?";
}

struct Modularity {
  Rational value;
  ModularityConvention convention = ModularityConvention::DirectedEq5;

  std::string str() const { return to_string(value); }
  friend bool operator==(const Modularity&, const Modularity&) = default;
};

/// Newman-Girvan modularity of the graph read as undirected. A pair connected in
/// either or both directions counts as one undirected edge.
inline Modularity modularity_undirected(const DependencyGraph& g, const Partition& part) {
  detail::require_edges(g);
  const auto community = part.dense(g);
  const auto n = g.node_count();

  std::vector<std::set<DependencyGraph::Index>> neighbours(n);
  for (auto [s, d] : g.edge_indices()) {
    neighbours[s].insert(d);
    neighbours[d].insert(s);
  }
  std::int64_t two_m = 0;     // sum of A_vw over ordered pairs
  std::int64_t intra = 0;     // sum of A_vw delta
  std::vector<std::int64_t> volume(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto k = detail::as_i64(neighbours[v].size());
    two_m += k;
    volume[community[v]] += k;
    for (auto w : neighbours[v])
      if (community[v] == community[w]) ++intra;
  }
  std::int64_t null_sum = 0;
  for (auto vol : volume) null_sum += vol * vol;
  // Q = (1/2m) [intra - null_sum / 2m] = (2m * intra - null_sum) / (2m)^2
  return {Rational(two_m * intra - null_sum, two_m * two_m), ModularityConvention::UndirectedEq4};
}

/// Directed modularity with null term k_i^out k_j^in / m and prefactor 1/m.
inline Modularity modularity_directed(const DependencyGraph& g, const Partition& part) {
  detail::require_edges(g);
  const auto community = part.dense(g);
  const auto n = g.node_count();
  const auto m = detail::as_i64(g.edge_count());

  std::vector<std::int64_t> out_volume(n, 0);
  std::vector<std::int64_t> in_volume(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out_volume[community[i]] += detail::as_i64(g.out_degree_at(i));
    in_volume[community[i]] += detail::as_i64(g.in_degree_at(i));
  }
  std::int64_t intra = 0;
  for (auto [s, d] : g.edge_indices())
    if (community[s] == community[d]) ++intra;
  std::int64_t null_sum = 0;
  for (std::size_t c = 0; c < n; ++c) null_sum += out_volume[c] * in_volume[c];
  return {Rational(m * intra - null_sum, m * m), ModularityConvention::DirectedEq5};
}

}  // namespace depmod
