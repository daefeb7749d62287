#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "depmod/cli/commands.hpp"

namespace depmod::cli {

/// Parses `args` (without the program name) and dispatches to a command.
/// `seed_env` stands in for the DEPMOD_SEED environment variable.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               std::optional<std::string> seed_env = std::nullopt) {
  CLI::App app{"depmod: package stability and modularity analysis for dependency graphs", "depmod"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::Table}, {"json", OutputFormat::Json}};
  const std::map<std::string, io::InputFormat> input_formats{
      {"deps", io::InputFormat::Deps}, {"dot", io::InputFormat::Dot}, {"json", io::InputFormat::Json}};
  const std::map<std::string, CouplingMode> couplings{{"classes", CouplingMode::Classes},
                                                     {"edges", CouplingMode::Edges}};
  const std::map<std::string, Convention> conventions{
      {"eq5", Convention::Eq5}, {"paper", Convention::Paper}, {"both", Convention::Both}};

  OutputFormat format = OutputFormat::Table;
  std::string input;
  std::optional<io::InputFormat> input_format;
  CouplingMode coupling = CouplingMode::Classes;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file (.deps, .dot, .json)")->required();
    sub->add_option("--input-format", input_format, "Override format detection")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--coupling", coupling, "Count couplings by distinct classes or by edges")
        ->transform(CLI::CheckedTransformer(couplings, CLI::ignore_case));
  };

  auto* metrics = app.add_subcommand("metrics", "Per-package Ca, Ce, instability and modularity");
  add_input(metrics);

  bool fail_on_violation = false;
  auto* sdp = app.add_subcommand("sdp", "Stable Dependencies Principle findings");
  add_input(sdp);
  sdp->add_flag("--fail-on-violation", fail_on_violation, "Exit 2 when a violation is found");

  std::string cls, to;
  Convention convention = Convention::Both;
  auto* move = app.add_subcommand("move", "Evaluate moving one class to another package");
  add_input(move);
  move->add_option("--class", cls, "Class to move")->required();
  move->add_option("--to", to, "Destination package")->required();
  move->add_option("--convention", convention, "Modularity change convention")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));

  std::size_t max_moves = 10;
  auto* suggest = app.add_subcommand("suggest", "Greedy modularity partition and the moves it implies");
  add_input(suggest);
  suggest->add_option("--max-moves", max_moves, "Maximum number of moves to list");

  ValidateOptions vopts;
  std::string graph_path;
  std::optional<io::InputFormat> graph_format;
  std::optional<std::uint64_t> seed;
  auto* validate = app.add_subcommand("validate", "Monte Carlo checks of the modularity/stability relation");
  validate->add_option("--trials", vopts.trials, "Proposition trials")->required();
  validate->add_option("--seed", seed, "Base seed (default: $DEPMOD_SEED, else 0)");
  validate->add_option("--graph", graph_path, "Graph for the null-model edge frequency check");
  validate->add_option("--input-format", graph_format, "Override format detection for --graph")
      ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
  validate->add_option("--samples", vopts.samples, "Rewired samples for the null-model check");
  validate->add_option("--swap-multiplier", vopts.swap_multiplier, "Attempted swaps per edge");
  validate->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* example = app.add_subcommand("example", "Worked two-package example with its golden values");

  std::string scan_root, profile_path, scan_out;
  auto* scan = app.add_subcommand("scan", "Extract a .deps graph from a source tree");
  scan->add_option("root", scan_root, "Source directory")->required();
  scan->add_option("--profile", profile_path, "Scan profile (JSON)")->required();
  scan->add_option("--out", scan_out, "Output .deps path (default: stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const InputOptions in{input, input_format, coupling};
  if (metrics->parsed()) return cmd_metrics(in, format, out, err);
  if (sdp->parsed()) return cmd_sdp(in, fail_on_violation, format, out, err);
  if (move->parsed()) return cmd_move(in, cls, to, convention, format, out, err);
  if (suggest->parsed()) return cmd_suggest(in, max_moves, format, out, err);
  if (validate->parsed()) {
    if (seed) {
      vopts.seed = *seed;
    } else if (seed_env && !seed_env->empty()) {
      try {
        vopts.seed = std::stoull(*seed_env);
      } catch (const std::exception&) {
        err << "error: DEPMOD_SEED is not an unsigned integer: '" << *seed_env << "'\n";
        return kUsageError;
      }
    }
    if (!graph_path.empty()) vopts.graph = graph_path;
    vopts.graph_format = graph_format;
    return cmd_validate(vopts, format, out, err);
  }
  if (example->parsed()) return cmd_example(out, err);
  if (scan->parsed()) {
    std::optional<std::filesystem::path> out_path;
    if (!scan_out.empty()) out_path = scan_out;
    return cmd_scan(scan_root, profile_path, out_path, out, err);
  }
  return kUsageError;
}

}  // namespace depmod::cli
