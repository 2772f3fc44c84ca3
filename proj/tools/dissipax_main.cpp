// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: one experiment per invocation, configured by a
// line-oriented key = value file with [section] headers.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dissipax/experiments.hpp"

namespace
{

struct CommonArgs
{
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
};

void add_common(CLI::App *cmd, CommonArgs &args)
{
  cmd->add_option("--config", args.config_path, "experiment config file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_dir, "output directory override");
  cmd->add_option("--seed", args.seed, "random seed override")
      ->each([&args](const std::string &) { args.seed_set = true; });
  cmd->add_option("--threads", args.threads, "worker thread override");
}

int run(const std::string &kind, const CommonArgs &args)
{
  using namespace dissipax;
  try
  {
    ConfigMap map = ConfigMap::load(args.config_path);
    map.set("experiment.kind", kind);
    if (!args.out_dir.empty())
      map.set("output.dir", args.out_dir);
    if (args.seed_set)
      map.set("output.seed", std::to_string(args.seed));
    if (args.threads > 0)
      map.set("output.threads", std::to_string(args.threads));
    const ExperimentConfig cfg = ExperimentConfig::from_map(std::move(map));
    return run_experiment(cfg);
  }
  catch (const ValidationError &ex)
  {
    std::cerr << "error = validation\nmessage = " << ex.what() << "\n";
    return kExitValidation;
  }
  catch (const IoError &ex)
  {
    std::cerr << "error = io\nmessage = " << ex.what() << "\n";
    return kExitIo;
  }
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"dissipax: dissipative Maxwell eigenproblems, homogenization, "
               "and spectral design"};
  app.require_subcommand(1);

  const struct
  {
    const char *cli;
    const char *kind;
    const char *help;
  } commands[] = {
      {"spectrum", "spectrum", "solve eigenpairs near a shift"},
      {"gap-scan", "gap_scan", "empirical eigenvalue-free disc scan"},
      {"hconv-test", "hconv_test", "div-curl H-limit verification"},
      {"eigen-convergence", "eigen_convergence",
       "laminate eigenvalue convergence experiment"},
      {"optimize", "optimize", "d_I minimization over composite designs"},
      {"closure-check", "closure_check", "G_theta-closure membership"},
  };

  CommonArgs args[std::size(commands)];
  for (std::size_t i = 0; i < std::size(commands); ++i)
  {
    CLI::App *cmd = app.add_subcommand(commands[i].cli, commands[i].help);
    add_common(cmd, args[i]);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < std::size(commands); ++i)
  {
    if (app.got_subcommand(commands[i].cli))
      return run(commands[i].kind, args[i]);
  }
  return dissipax::kExitValidation;
}
