#pragma once

// Command implementations behind the depmod executable. Each returns a process exit code:
// 0 success, 1 usage or I/O error, 2 SDP violations with --fail-on-violation,
// 3 internal invariant failure. Results go to `out`, diagnostics to `err`.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "depmod/community.hpp"
#include "depmod/error.hpp"
#include "depmod/fixtures.hpp"
#include "depmod/io/deps_format.hpp"
#include "depmod/io/load.hpp"
#include "depmod/io/report.hpp"
#include "depmod/io/scanner.hpp"
#include "depmod/metrics.hpp"
#include "depmod/moves.hpp"
#include "depmod/null_model.hpp"
#include "depmod/sdp.hpp"

namespace depmod::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kViolationsFound = 2,
  kInvariantFailure = 3,
};

enum class OutputFormat { Table, Json };
enum class Convention { Eq5, Paper, Both };

struct InputOptions {
  std::filesystem::path path;
  std::optional<io::InputFormat> format;
  CouplingMode coupling = CouplingMode::Classes;
};

struct ValidateOptions {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> graph;
  std::optional<io::InputFormat> graph_format;
  std::uint64_t samples = 10000;
  std::uint64_t swap_multiplier = 10;
};

/// Tolerance reported next to the null-model comparison.
inline const Rational kNullModelTolerance(1, 20);

namespace detail {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Invariant ? kInvariantFailure : kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantFailure;
  }
}

/// Left-aligned columns separated by two spaces, no trailing whitespace.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string join(const std::set<NodeId>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ",") + id.str();
  return out.empty() ? "-" : out;
}

inline std::string instability_display(const Instability& i) {
  return i.defined() ? to_display(i.value()) : "n/a";
}

inline void print_packages(std::ostream& out, const std::vector<PackageMetrics>& packages) {
  Table t({"package", "ca", "ce", "instability", "border_nodes"});
  for (const auto& p : packages)
    t.add({p.package.str(), std::to_string(p.ca), std::to_string(p.ce),
           instability_display(p.instability), join(p.border_nodes)});
  t.print(out);
}

inline void print_modularity(std::ostream& out, const std::optional<io::ModularityPair>& mod) {
  if (!mod) {
    out << "modularity: n/a (graph has no edges)\n";
    return;
  }
  out << "modularity (directed):   " << to_display(mod->directed) << '\n';
  out << "modularity (undirected): " << to_display(mod->undirected) << '\n';
}

inline void print_move(std::ostream& out, const MoveEvaluation& ev, Convention convention) {
  out << "move " << describe(ev.move) << '\n';
  if (convention != Convention::Paper) {
    out << "  directed:      q_before " << to_display(ev.q_before) << "  q_after " << to_display(ev.q_after)
        << "  delta_q " << to_display(ev.delta_q) << '\n';
  }
  if (convention != Convention::Eq5) {
    out << "  paper-example: delta_q " << to_display(ev.delta_q_paper) << '\n';
  }
  out << "  violations suppressed: " << ev.violations_suppressed << '\n';
}

inline std::string terms_display(const std::vector<ContributionTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + std::string(t.present ? "1" : "0") + " - " + std::to_string(t.k_out) + "x" +
           std::to_string(t.k_in) + "/2m)";
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

inline int cmd_metrics(const InputOptions& in, OutputFormat format, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto g = io::load_graph(in.path, in.format);
    const auto report = io::analyze(g, in.coupling);
    if (format == OutputFormat::Json) {
      out << io::emit_report(report);
      return kSuccess;
    }
    detail::print_packages(out, report.packages);
    detail::print_modularity(out, report.modularity);
    return kSuccess;
  });
}

inline int cmd_sdp(const InputOptions& in, bool fail_on_violation, OutputFormat format,
                   std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto g = io::load_graph(in.path, in.format);
    const auto report = io::analyze(g, in.coupling);
    const auto hard = count_severity(report.violations, Severity::Violation);
    if (format == OutputFormat::Json) {
      out << io::emit_report(report);
    } else if (report.violations.empty()) {
      out << "no violations\n";
    } else {
      detail::Table t({"src", "dst", "src_package", "dst_package", "src_I", "dst_I", "severity", "degree_remark"});
      const auto remarks = remark_findings(g);
      for (const auto& v : report.violations) {
        std::string remark = "-";
        for (const auto& r : remarks)
          if (r.edge == v.edge) remark = std::string(to_string(r.condition.verdict));
        t.add({v.edge.src.str(), v.edge.dst.str(), v.src_package.str(), v.dst_package.str(),
               v.src_instability.str(), v.dst_instability.str(), std::string(to_string(v.severity)), remark});
      }
      t.print(out);
      out << hard << " violation(s), "
          << count_severity(report.violations, Severity::BoundaryEqual) << " boundary-equal, "
          << count_severity(report.violations, Severity::UndefinedEndpoint) << " undefined-endpoint\n";
    }
    return (fail_on_violation && hard > 0) ? kViolationsFound : kSuccess;
  });
}

inline int cmd_move(const InputOptions& in, const std::string& cls, const std::string& to,
                    Convention convention, OutputFormat format, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto g = io::load_graph(in.path, in.format);
    const NodeId node(cls);
    const PackageId target(to);
    if (!g.contains(node)) throw Error(ErrorKind::UnknownNode, "'" + cls + "'");
    if (!g.has_package(target)) throw Error(ErrorKind::UnknownPackage, "'" + to + "'");
    const auto ev = evaluate_move(g, {node, g.package_of(node), target});
    if (format == OutputFormat::Json) {
      auto report = io::analyze(g, in.coupling);
      report.suggestions.moves.push_back(ev);
      out << io::emit_report(report);
    } else {
      detail::print_move(out, ev, convention);
    }
    return kSuccess;
  });
}

inline int cmd_suggest(const InputOptions& in, std::size_t max_moves, OutputFormat format,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto g = io::load_graph(in.path, in.format);
    if (g.edge_count() == 0)
      throw Error(ErrorKind::EmptyGraph, "nothing to suggest: the graph has no edges");
    auto [part, suggestion] = greedy_partition(g);
    auto ranked = rank_moves(g, suggestion.moves);
    if (ranked.size() > max_moves) ranked.resize(max_moves);

    auto report = io::analyze(g, in.coupling);
    report.suggestions.moves = ranked;
    report.suggestions.initial_q = suggestion.initial_q;
    report.suggestions.final_q = suggestion.final_q;
    report.suggestions.communities = groups_of(g, part);
    if (format == OutputFormat::Json) {
      out << io::emit_report(report);
      return kSuccess;
    }
    out << "communities: " << report.suggestions.communities.size() << '\n';
    for (const auto& c : report.suggestions.communities) {
      std::string line;
      for (const auto& n : c) line += (line.empty() ? "" : " ") + n.str();
      out << "  {" << line << "}\n";
    }
    out << "current Q:   " << to_display(report.modularity->directed) << '\n';
    out << "final Q:     " << to_display(suggestion.final_q) << '\n';
    out << "merges:      " << suggestion.merges.size() << '\n';
    out << "moves:       " << ranked.size() << " of " << suggestion.moves.size() << '\n';
    for (const auto& ev : ranked) {
      out << "  " << describe(ev.move) << "  delta_q " << to_display(ev.delta_q) << "  paper "
          << to_display(ev.delta_q_paper) << '\n';
    }
    return kSuccess;
  });
}

inline int cmd_validate(const ValidateOptions& opts, OutputFormat format, std::ostream& out,
                        std::ostream& err) {
  return detail::guarded(err, [&] {
    if (opts.trials < 1) throw Error(ErrorKind::BadArgument, "--trials must be at least 1");
    io::Report report;
    report.proposition = validate_proposition({1, opts.seed, opts.trials});
    if (opts.graph) {
      const auto g = io::load_graph(*opts.graph, opts.graph_format);
      report.null_probability = validate_null_probability(g, {opts.swap_multiplier, opts.seed, opts.samples});
    }
    const auto& prop = *report.proposition;
    if (format == OutputFormat::Json) {
      out << io::emit_report(report);
    } else {
      out << "proposition: " << prop.successes << "/" << prop.trials << '\n';
      if (report.null_probability) {
        const auto& np = *report.null_probability;
        std::size_t saturated = 0;
        for (const auto& p : np.pairs) saturated += p.saturated ? 1 : 0;
        out << "null model: samples " << np.trials << ", degree-preserving " << np.successes << "/"
            << np.trials << ", max_abs_error " << to_display(np.max_abs_error) << ", saturated pairs "
            << saturated << ", within " << to_decimal_string(kNullModelTolerance) << ": "
            << (np.max_abs_error <= kNullModelTolerance ? "yes" : "no") << '\n';
      }
    }
    if (prop.successes != prop.trials) {
      err << "error: " << (prop.trials - prop.successes) << " proposition trial(s) failed\n";
      return kInvariantFailure;
    }
    return kSuccess;
  });
}

/// Prints the two embedded worked-example conditions and recomputes their modularity changes.
/// `tamper` lets tests corrupt a fixture before the self-check.
inline int cmd_example(std::ostream& out, std::ostream& err,
                       const std::function<void(fixtures::WorkedExample&)>& tamper = {}) {
  return detail::guarded(err, [&] {
    std::vector<fixtures::WorkedExample> examples{fixtures::condition_a(), fixtures::condition_b()};
    if (tamper)
      for (auto& ex : examples) tamper(ex);

    bool consistent = true;
    std::vector<Rational> deltas;
    for (const auto& ex : examples) {
      const auto m = ex.graph.edge_count();
      const auto published = delta_q_paper_convention(ex.published_gained, ex.published_lost, m);
      const auto ev = evaluate_move(ex.graph, ex.move);
      const auto terms = move_terms(ex.graph, ex.move);
      out << "condition (" << ex.name << "), m = " << m << '\n';
      out << io::serialize_deps(ex.graph);
      out << "  move " << describe(ex.move) << '\n';
      out << "  published terms: " << detail::terms_display(ex.published_gained) << " - "
          << detail::terms_display(ex.published_lost) << '\n';
      out << "  graph terms:     " << detail::terms_display(terms.gained) << " - "
          << detail::terms_display(terms.lost) << '\n';
      out << "  delta_q (paper-example, published terms): " << to_display(published) << '\n';
      out << "  delta_q (paper-example, graph terms):     " << to_display(ev.delta_q_paper) << '\n';
      out << "  delta_q (directed):                       " << to_display(ev.delta_q) << '\n';
      out << "  SDP violations: " << count_severity(check_sdp(ex.graph), Severity::Violation) << '\n';
      if (published != ex.published_delta || ev.delta_q_paper != ex.published_delta) {
        err << "error: condition (" << ex.name << ") recomputes to " << to_string(published) << " / "
            << to_string(ev.delta_q_paper) << ", expected " << to_string(ex.published_delta) << '\n';
        consistent = false;
      }
      deltas.push_back(ev.delta_q_paper);
    }
    out << "hiding the SDP-violating dependency gains more: " << to_display(deltas[1]) << " > "
        << to_display(deltas[0]) << " is " << (deltas[1] > deltas[0] ? "true" : "false") << '\n';
    if (!consistent || !(deltas[1] > deltas[0])) return kInvariantFailure;
    return kSuccess;
  });
}

inline int cmd_scan(const std::filesystem::path& root, const std::filesystem::path& profile_path,
                    const std::optional<std::filesystem::path>& out_path, std::ostream& out,
                    std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto profile = io::parse_profile(io::read_text(profile_path));
    const auto result = io::scan_sources(root, profile);
    const auto text = io::serialize_deps(result.graph);
    std::ostream& summary = out_path ? out : err;
    if (out_path) {
      std::ofstream file(*out_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::IoError, "cannot write '" + out_path->string() + "'");
      file << text;
    } else {
      out << text;
    }
    summary << "nodes " << result.graph.node_count() << ", edges " << result.graph.edge_count()
            << ", unresolved imports " << result.unresolved.size() << '\n';
    for (const auto& u : result.unresolved)
      err << "warning: unresolved import '" << u.module << "' in " << u.from.str() << '\n';
    return kSuccess;
  });
}

}  // namespace depmod::cli
