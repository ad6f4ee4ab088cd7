#include <CLI11.hpp>
#include <iostream>
#include <stdexcept>
#include <string>

#include "cbctt/cbctt.hpp"

namespace {

cbctt::SoftWeights parse_weights(const std::string& spec) {
  int w[4];
  std::istringstream in(spec);
  std::string token;
  int i = 0;
  while (std::getline(in, token, ',')) {
    if (i >= 4)
      throw std::runtime_error("--weights takes exactly four values");
    std::size_t pos = 0;
    const int v = std::stoi(token, &pos);
    if (pos != token.size())
      throw std::runtime_error("bad weight '" + token + "'");
    if (v < 0) throw std::runtime_error("weights must be >= 0");
    w[i++] = v;
  }
  if (i != 4)
    throw std::runtime_error("--weights takes exactly four values");
  return {w[0], w[1], w[2], w[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Harmony-search solver for curriculum-based course timetabling"};
  app.require_subcommand(1);

  cbctt::RunConfig config;
  std::string weights_spec;
  std::string instance_path, solution_path;
  bool table = false;

  const auto add_search_options = [&](CLI::App* cmd) {
    cmd->add_option("--hms", config.params.hms, "harmony memory size");
    cmd->add_option("--hmcr", config.params.hmcr,
                    "harmony memory considering rate in [0,1]");
    cmd->add_option("--par", config.params.par,
                    "pitch adjusting rate in [0,1]");
    cmd->add_option("--mi", config.params.mi, "improvisation budget");
    cmd->add_option("--seed", config.params.seed, "base RNG seed");
    cmd->add_option("--reps", config.repetitions,
                    "repetitions per instance (seeds seed, seed+1, ...)");
    cmd->add_option("--weights", weights_spec,
                    "soft-constraint weights w1,w2,w3,w4");
    cmd->add_option("--out", config.out_dir, "output directory");
  };

  auto* solve = app.add_subcommand(
      "solve", "solve instances, writing solution and trace files");
  solve->add_option("instances", config.instance_paths, "instance files")
      ->required();
  add_search_options(solve);

  auto* validate = app.add_subcommand(
      "validate", "audit a solution file against its instance");
  validate->add_option("instance", instance_path, "instance file")->required();
  validate->add_option("solution", solution_path, "solution file")->required();
  validate->add_option("--weights", weights_spec,
                       "soft-constraint weights w1,w2,w3,w4");

  auto* benchmark = app.add_subcommand(
      "benchmark", "sweep instances and write a results CSV");
  benchmark->add_option("instances", config.instance_paths, "instance files")
      ->required();
  add_search_options(benchmark);
  benchmark->add_flag("--table", table, "print an aligned table instead of CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!weights_spec.empty()) config.weights = parse_weights(weights_spec);
    if (solve->parsed())
      return cbctt::cmd_solve(config, std::cout, std::cerr);
    if (validate->parsed())
      return cbctt::cmd_validate(instance_path, solution_path, config.weights,
                                 std::cout, std::cerr);
    config.format =
        table ? cbctt::ReportFormat::Table : cbctt::ReportFormat::Csv;
    return cbctt::cmd_benchmark(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cbctt::kExitParse;
  }
}
