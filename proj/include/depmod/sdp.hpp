#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "depmod/graph.hpp"
#include "depmod/metrics.hpp"

namespace depmod {

enum class Severity { Violation, BoundaryEqual, UndefinedEndpoint };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Violation: return "violation";
    case Severity::BoundaryEqual: return "boundary-equal";
    case Severity::UndefinedEndpoint: return "undefined-endpoint";
  }
  return "?";
}

/// A cross-package edge whose source package is not strictly less stable than its target.
struct SdpViolation {
  Edge edge;
  PackageId src_package;
  PackageId dst_package;
  Instability src_instability;
  Instability dst_instability;
  Severity severity = Severity::Violation;
};

/// Package-level check: a package should only depend on packages with lower instability.
/// Cross edges that respect the ordering are omitted; the result is sorted by (src, dst).
inline std::vector<SdpViolation> check_sdp(const DependencyGraph& g,
                                           CouplingMode mode = CouplingMode::Classes) {
  std::map<PackageId, Instability> by_package;
  for (const auto& p : g.packages()) by_package.emplace(p, instability(g, p, mode));

  std::vector<SdpViolation> out;
  for (auto [s, d] : g.edge_indices()) {
    const auto& ps = g.package_at(s);
    const auto& pd = g.package_at(d);
    if (ps == pd) continue;
    const auto& is = by_package.at(ps);
    const auto& id = by_package.at(pd);
    Severity severity;
    if (!is.defined() || !id.defined()) {
      severity = Severity::UndefinedEndpoint;
    } else if (is.value() < id.value()) {
      severity = Severity::Violation;
    } else if (is.value() == id.value()) {
      severity = Severity::BoundaryEqual;
    } else {
      continue;
    }
    out.push_back({{g.node(s), g.node(d)}, ps, pd, is, id, severity});
  }
  return out;
}

inline std::size_t count_severity(const std::vector<SdpViolation>& findings, Severity s) {
  std::size_t n = 0;
  for (const auto& f : findings) n += f.severity == s ? 1 : 0;
  return n;
}

enum class RemarkVerdict { Remark1, Remark2, Neither };

inline std::string_view to_string(RemarkVerdict v) {
  switch (v) {
    case RemarkVerdict::Remark1: return "remark1";
    case RemarkVerdict::Remark2: return "remark2";
    case RemarkVerdict::Neither: return "neither";
  }
  return "?";
}

/// Node-level degree heuristic for a pair of border nodes i, j.
/// remark1 (SDP satisfied): i_out > i_in and j_out < j_in.
/// remark2 (SDP not satisfied): i_out < i_in and j_out > j_in.
struct RemarkCondition {
  std::size_t i_out = 0;
  std::size_t i_in = 0;
  std::size_t j_out = 0;
  std::size_t j_in = 0;
  RemarkVerdict verdict = RemarkVerdict::Neither;
};

inline RemarkCondition classify_degrees(std::size_t i_out, std::size_t i_in, std::size_t j_out,
                                        std::size_t j_in) {
  RemarkCondition c{i_out, i_in, j_out, j_in, RemarkVerdict::Neither};
  if (i_out > i_in && j_out < j_in) c.verdict = RemarkVerdict::Remark1;
  else if (i_out < i_in && j_out > j_in) c.verdict = RemarkVerdict::Remark2;
  return c;
}

/// Both nodes must be border nodes of their own packages; they need not be in different packages.
inline RemarkCondition classify_remark(const DependencyGraph& g, const NodeId& i, const NodeId& j) {
  const auto ii = g.index_of(i);
  const auto ji = g.index_of(j);
  for (auto idx : {ii, ji}) {
    if (!is_border_node(g, idx))
      throw Error(ErrorKind::NotBorderNode, "'" + g.node(idx).str() + "' has no cross-package edge");
  }
  return classify_degrees(g.out_degree_at(ii), g.in_degree_at(ii), g.out_degree_at(ji),
                          g.in_degree_at(ji));
}

struct RemarkFinding {
  Edge edge;
  RemarkCondition condition;
};

/// Degree-heuristic verdict for every cross-package edge, sorted by (src, dst).
inline std::vector<RemarkFinding> remark_findings(const DependencyGraph& g) {
  std::vector<RemarkFinding> out;
  for (auto [s, d] : g.edge_indices()) {
    if (g.package_at(s) == g.package_at(d)) continue;
    out.push_back({{g.node(s), g.node(d)},
                   classify_degrees(g.out_degree_at(s), g.in_degree_at(s), g.out_degree_at(d),
                                    g.in_degree_at(d))});
  }
  return out;
}

}  // namespace depmod
