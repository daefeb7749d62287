#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "depmod/error.hpp"
#include "depmod/ids.hpp"

namespace depmod {

/// Directed dependency edge: `src` depends on `dst`.
struct Edge {
  NodeId src;
  NodeId dst;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Immutable simple digraph of classes, each assigned to exactly one package.
///
/// Nodes are indexed densely in NodeId order, so index order is the canonical
/// iteration order. Edge lists are sorted by (src, dst). Operations that would
/// modify the graph return a new value.
class DependencyGraph {
 public:
  using Index = std::size_t;

  DependencyGraph() = default;

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return ids_.empty(); }

  std::span<const NodeId> nodes() const noexcept { return ids_; }
  const NodeId& node(Index i) const { return ids_.at(i); }

  bool contains(const NodeId& n) const { return find(n).has_value(); }

  std::optional<Index> find(const NodeId& n) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), n);
    if (it == ids_.end() || *it != n) return std::nullopt;
    return static_cast<Index>(it - ids_.begin());
  }

  Index index_of(const NodeId& n) const {
    if (auto i = find(n)) return *i;
    throw Error(ErrorKind::UnknownNode, "'" + n.str() + "'");
  }

  const PackageId& package_at(Index i) const { return packages_.at(i); }
  const PackageId& package_of(const NodeId& n) const { return packages_[index_of(n)]; }

  std::span<const Index> successors(Index i) const { return out_[i]; }
  std::span<const Index> predecessors(Index i) const { return in_[i]; }

  std::size_t out_degree_at(Index i) const { return out_[i].size(); }
  std::size_t in_degree_at(Index i) const { return in_[i].size(); }
  std::size_t out_degree(const NodeId& n) const { return out_[index_of(n)].size(); }
  std::size_t in_degree(const NodeId& n) const { return in_[index_of(n)].size(); }

  bool has_edge_at(Index src, Index dst) const {
    const auto& succ = out_[src];
    return std::binary_search(succ.begin(), succ.end(), dst);
  }
  bool has_edge(const NodeId& src, const NodeId& dst) const {
    auto s = find(src);
    auto d = find(dst);
    return s && d && has_edge_at(*s, *d);
  }

  /// Edges as index pairs, sorted by (src, dst).
  std::vector<std::pair<Index, Index>> edge_indices() const {
    std::vector<std::pair<Index, Index>> out;
    out.reserve(edge_count_);
    for (Index s = 0; s < out_.size(); ++s)
      for (Index d : out_[s]) out.emplace_back(s, d);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (auto [s, d] : edge_indices()) out.push_back({ids_[s], ids_[d]});
    return out;
  }

  /// Distinct packages in PackageId order.
  std::vector<PackageId> packages() const {
    std::set<PackageId> seen(packages_.begin(), packages_.end());
    return {seen.begin(), seen.end()};
  }

  bool has_package(const PackageId& p) const {
    return std::find(packages_.begin(), packages_.end(), p) != packages_.end();
  }

  /// Member indices of `p`, ascending. Throws UnknownPackage when no node carries `p`.
  std::vector<Index> members(const PackageId& p) const {
    std::vector<Index> out;
    for (Index i = 0; i < packages_.size(); ++i)
      if (packages_[i] == p) out.push_back(i);
    if (out.empty()) throw Error(ErrorKind::UnknownPackage, "'" + p.str() + "'");
    return out;
  }

  DependencyGraph with_node(const NodeId& n, const PackageId& p) const;
  DependencyGraph with_edge(const NodeId& src, const NodeId& dst) const;
  DependencyGraph without_edge(const NodeId& src, const NodeId& dst) const;

  /// Same edges, `n` moved to package `p`.
  DependencyGraph reassign(const NodeId& n, const PackageId& p) const {
    DependencyGraph copy = *this;
    copy.packages_[index_of(n)] = p;
    return copy;
  }

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<NodeId> ids_;
  std::vector<PackageId> packages_;
  std::vector<std::vector<Index>> out_;
  std::vector<std::vector<Index>> in_;
  std::size_t edge_count_ = 0;
};

/// Single-owner construction; `build()` finalizes into an immutable graph.
class GraphBuilder {
 public:
  GraphBuilder() = default;

  explicit GraphBuilder(const DependencyGraph& g) {
    for (std::size_t i = 0; i < g.node_count(); ++i) nodes_.emplace(g.node(i), g.package_at(i));
    for (auto& e : g.edges()) edges_.emplace(e.src, e.dst);
  }

  GraphBuilder& add_node(const NodeId& n, const PackageId& p) {
    if (!nodes_.emplace(n, p).second) throw Error(ErrorKind::DuplicateNode, "'" + n.str() + "'");
    return *this;
  }

  GraphBuilder& add_edge(const NodeId& src, const NodeId& dst) {
    if (!nodes_.contains(src)) throw Error(ErrorKind::UnknownNode, "'" + src.str() + "'");
    if (!nodes_.contains(dst)) throw Error(ErrorKind::UnknownNode, "'" + dst.str() + "'");
    if (src == dst) throw Error(ErrorKind::SelfLoop, "'" + src.str() + "'");
    if (!edges_.emplace(src, dst).second)
      throw Error(ErrorKind::DuplicateEdge, "'" + src.str() + "' -> '" + dst.str() + "'");
    return *this;
  }

  GraphBuilder& remove_edge(const NodeId& src, const NodeId& dst) {
    edges_.erase({src, dst});
    return *this;
  }

  bool has_node(const NodeId& n) const { return nodes_.contains(n); }

  DependencyGraph build() const {
    DependencyGraph g;
    g.ids_.reserve(nodes_.size());
    g.packages_.reserve(nodes_.size());
    for (const auto& [id, pkg] : nodes_) {
      g.ids_.push_back(id);
      g.packages_.push_back(pkg);
    }
    g.out_.assign(g.ids_.size(), {});
    g.in_.assign(g.ids_.size(), {});
    // edges_ is ordered by (src, dst), so adjacency lists come out sorted
    for (const auto& [src, dst] : edges_) {
      auto s = *g.find(src);
      auto d = *g.find(dst);
      g.out_[s].push_back(d);
      g.in_[d].push_back(s);
    }
    for (auto& preds : g.in_) std::sort(preds.begin(), preds.end());
    g.edge_count_ = edges_.size();
    return g;
  }

 private:
  std::map<NodeId, PackageId> nodes_;
  std::set<std::pair<NodeId, NodeId>> edges_;
};

inline DependencyGraph DependencyGraph::with_node(const NodeId& n, const PackageId& p) const {
  return GraphBuilder(*this).add_node(n, p).build();
}

inline DependencyGraph DependencyGraph::with_edge(const NodeId& src, const NodeId& dst) const {
  return GraphBuilder(*this).add_edge(src, dst).build();
}

inline DependencyGraph DependencyGraph::without_edge(const NodeId& src, const NodeId& dst) const {
  return GraphBuilder(*this).remove_edge(src, dst).build();
}

/// Total map from node to community label. Labels are opaque strings.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::map<NodeId, std::string> labels) : labels_(std::move(labels)) {}

  /// The current package assignment of `g`, read as a partition.
  static Partition from_packages(const DependencyGraph& g) {
    std::map<NodeId, std::string> labels;
    for (std::size_t i = 0; i < g.node_count(); ++i) labels.emplace(g.node(i), g.package_at(i).str());
    return Partition(std::move(labels));
  }

  /// Everything in one community.
  static Partition single(const DependencyGraph& g, const std::string& label = "all") {
    std::map<NodeId, std::string> labels;
    for (const auto& n : g.nodes()) labels.emplace(n, label);
    return Partition(std::move(labels));
  }

  static Partition singletons(const DependencyGraph& g) {
    std::map<NodeId, std::string> labels;
    for (const auto& n : g.nodes()) labels.emplace(n, n.str());
    return Partition(std::move(labels));
  }

  void assign(const NodeId& n, std::string label) { labels_[n] = std::move(label); }

  const std::map<NodeId, std::string>& labels() const noexcept { return labels_; }

  std::optional<std::string> label_of(const NodeId& n) const {
    auto it = labels_.find(n);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }

  /// Dense community ids per node index of `g`; equal ids iff equal labels.
  /// Throws IncompletePartition if a node of `g` is unlabeled.
  std::vector<std::size_t> dense(const DependencyGraph& g) const {
    std::map<std::string, std::size_t> ids;
    std::vector<std::size_t> out;
    out.reserve(g.node_count());
    for (const auto& n : g.nodes()) {
      auto it = labels_.find(n);
      if (it == labels_.end())
        throw Error(ErrorKind::IncompletePartition, "node '" + n.str() + "' has no label");
      out.push_back(ids.emplace(it->second, ids.size()).first->second);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::map<NodeId, std::string> labels_;
};

/// Groups of node ids sharing a label, each group sorted, groups sorted by first member.
/// Two partitions are equal up to relabeling iff their groupings are equal.
inline std::vector<std::vector<NodeId>> groups_of(const DependencyGraph& g, const Partition& part) {
  std::map<std::string, std::vector<NodeId>> by_label;
  for (const auto& n : g.nodes()) {
    auto label = part.label_of(n);
    if (!label) throw Error(ErrorKind::IncompletePartition, "node '" + n.str() + "' has no label");
    by_label[*label].push_back(n);
  }
  std::vector<std::vector<NodeId>> out;
  for (auto& [label, members] : by_label) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace depmod
