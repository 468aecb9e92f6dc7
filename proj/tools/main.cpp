#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, singlet6::cli::CommonOptions& opts, std::string& config_path) {
  cmd->add_option("--phi", opts.phi, "Emission phase in radians (default pi)");
  cmd->add_option("--split", opts.split,
                  "Splitter amplitudes: sym, cascade, or a1,a2,a3[/b1,b2,b3]");
  cmd->add_option("--noise", opts.noise, "White-noise fraction in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--shots", opts.shots, "Events per measurement setting");
  cmd->add_option("--seed", opts.seed, "Random seed");
  cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
  cmd->add_option("--format", opts.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--config", config_path,
                  "key=value file with defaults for phi, split, noise, shots, seed");
}

// The config file provides defaults, so it is applied before CLI11 parses the
// flags that override it.
std::string prescan_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return std::string(arg.substr(9));
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Six-photon polarization-singlet simulator"};
  app.require_subcommand(1);

  singlet6::cli::CommonOptions opts;
  std::string config_path;
  try {
    config_path = prescan_config_path(argc, argv);
    if (!config_path.empty()) singlet6::cli::apply_config_file(config_path, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto* pipeline = app.add_subcommand(
      "pipeline", "Post-selected six-qubit state, success probability and fidelity");
  add_common(pipeline, opts, config_path);

  std::string setting = "zzzzzz";
  std::string angles;
  auto* histogram =
      app.add_subcommand("histogram", "Sixfold coincidence distribution for one setting");
  add_common(histogram, opts, config_path);
  histogram->add_option("--setting", setting,
                        "Six letters over x/y/z, or 'custom' with --angles");
  histogram->add_option("--angles", angles,
                        "Custom analyzer wave plates, degrees: hwp:qwp per qubit");

  std::string mode = "f";
  std::string bra = "V";
  std::string basis = "HV";
  auto* project =
      app.add_subcommand("project", "Condition on one detector and report the rest");
  add_common(project, opts, config_path);
  project->add_option("--mode", mode, "Mode to project (a..f)");
  project->add_option("--bra", bra, "Projection outcome: H, V, D, A, L or R");
  project->add_option("--basis", basis, "Report basis: HV or DA")
      ->check(CLI::IsMember({"HV", "DA"}));

  std::vector<std::string> counts_paths;
  std::string golden_path = "data/witness_reduced_terms.txt";
  int resamples = 2000;
  auto* witness = app.add_subcommand(
      "witness", "Entanglement witnesses, tolerances and three-setting estimation");
  add_common(witness, opts, config_path);
  witness->add_option("--counts", counts_paths,
                      "Three histogram CSV files (x, y, z settings)")
      ->expected(3);
  witness->add_option("--golden", golden_path, "Reference term list for the reduced witness");
  witness->add_option("--resamples", resamples, "Bootstrap resamples for the error bar");

  int trials = 100;
  auto* invariance = app.add_subcommand(
      "invariance", "Collective-rotation invariance check over random unitaries");
  add_common(invariance, opts, config_path);
  invariance->add_option("--trials", trials, "Number of random unitaries");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pipeline->parsed()) return singlet6::cli::cmd_pipeline(opts);
    if (histogram->parsed()) return singlet6::cli::cmd_histogram(opts, setting, angles);
    if (project->parsed()) return singlet6::cli::cmd_project(opts, mode, bra, basis);
    if (witness->parsed()) {
      return singlet6::cli::cmd_witness(opts, counts_paths, golden_path, resamples);
    }
    if (invariance->parsed()) return singlet6::cli::cmd_invariance(opts, trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
