#pragma once

// JSON analysis report. Key order is fixed; every rational is written twice, as an exact
// string ("57/20") and as `<key>_decimal` rounded to six places. Layout is described by
// schema/report.schema.json.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "depmod/community.hpp"
#include "depmod/graph.hpp"
#include "depmod/metrics.hpp"
#include "depmod/moves.hpp"
#include "depmod/null_model.hpp"
#include "depmod/sdp.hpp"

namespace depmod::io {

struct ModularityPair {
  Rational directed;
  Rational undirected;
};

struct Suggestions {
  std::vector<MoveEvaluation> moves;
  std::optional<Rational> initial_q;
  std::optional<Rational> final_q;
  std::vector<std::vector<NodeId>> communities;
};

struct Report {
  std::vector<PackageMetrics> packages;
  std::vector<SdpViolation> violations;
  std::optional<ModularityPair> modularity;
  Suggestions suggestions;
  std::optional<ValidationSummary> proposition;
  std::optional<ValidationSummary> null_probability;
};

/// Package metrics, SDP findings and both modularity values of the current packaging.
inline Report analyze(const DependencyGraph& g, CouplingMode mode = CouplingMode::Classes) {
  Report r;
  r.packages = package_report(g, mode);
  r.violations = check_sdp(g, mode);
  if (g.edge_count() > 0) {
    const auto part = Partition::from_packages(g);
    r.modularity = ModularityPair{modularity_directed(g, part).value,
                                  modularity_undirected(g, part).value};
  }
  return r;
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline void put_rational(ojson& obj, const std::string& key, const std::optional<Rational>& value) {
  if (value) {
    obj[key] = to_string(*value);
    obj[key + "_decimal"] = to_decimal(*value);
  } else {
    obj[key] = nullptr;
    obj[key + "_decimal"] = nullptr;
  }
}

inline ojson summary_json(const ValidationSummary& s) {
  ojson out;
  out["kind"] = s.kind;
  out["trials"] = s.trials;
  out["successes"] = s.successes;
  put_rational(out, "max_abs_error", s.max_abs_error);
  out["pairs"] = ojson::array();
  for (const auto& p : s.pairs) {
    ojson row;
    row["src"] = p.src.str();
    row["dst"] = p.dst.str();
    put_rational(row, "observed", p.observed);
    put_rational(row, "predicted", p.predicted);
    row["saturated"] = p.saturated;
    out["pairs"].push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const Report& r) {
  using detail::ojson;
  ojson doc;

  doc["packages"] = ojson::array();
  for (const auto& p : r.packages) {
    ojson row;
    row["name"] = p.package.str();
    row["ca"] = p.ca;
    row["ce"] = p.ce;
    detail::put_rational(row, "instability",
                         p.instability.defined() ? std::optional(p.instability.value()) : std::nullopt);
    row["border_nodes"] = ojson::array();
    for (const auto& n : p.border_nodes) row["border_nodes"].push_back(n.str());
    doc["packages"].push_back(std::move(row));
  }

  doc["violations"] = ojson::array();
  for (const auto& v : r.violations) {
    ojson row;
    row["src"] = v.edge.src.str();
    row["dst"] = v.edge.dst.str();
    row["src_package"] = v.src_package.str();
    row["dst_package"] = v.dst_package.str();
    row["severity"] = std::string(to_string(v.severity));
    row["rule"] = "package-instability";
    doc["violations"].push_back(std::move(row));
  }

  if (r.modularity) {
    ojson mod;
    detail::put_rational(mod, "directed", r.modularity->directed);
    detail::put_rational(mod, "undirected", r.modularity->undirected);
    doc["modularity"] = std::move(mod);
  } else {
    doc["modularity"] = nullptr;
  }

  ojson sugg;
  sugg["moves"] = ojson::array();
  for (const auto& ev : r.suggestions.moves) {
    ojson row;
    row["class"] = ev.move.cls.str();
    row["from"] = ev.move.from.str();
    row["to"] = ev.move.to.str();
    detail::put_rational(row, "delta_q", ev.delta_q);
    detail::put_rational(row, "delta_q_paper", ev.delta_q_paper);
    detail::put_rational(row, "q_before", ev.q_before);
    detail::put_rational(row, "q_after", ev.q_after);
    row["violations_suppressed"] = ev.violations_suppressed;
    sugg["moves"].push_back(std::move(row));
  }
  detail::put_rational(sugg, "initial_q", r.suggestions.initial_q);
  detail::put_rational(sugg, "final_q", r.suggestions.final_q);
  sugg["communities"] = ojson::array();
  for (const auto& c : r.suggestions.communities) {
    ojson members = ojson::array();
    for (const auto& n : c) members.push_back(n.str());
    sugg["communities"].push_back(std::move(members));
  }
  doc["suggestions"] = std::move(sugg);

  if (r.proposition || r.null_probability) {
    ojson val;
    val["proposition"] = r.proposition ? detail::summary_json(*r.proposition) : ojson(nullptr);
    val["null_probability"] =
        r.null_probability ? detail::summary_json(*r.null_probability) : ojson(nullptr);
    doc["validation"] = std::move(val);
  }
  return doc;
}

inline std::string emit_report(const Report& r) { return report_json(r).dump(2) + "\n"; }

}  // namespace depmod::io
