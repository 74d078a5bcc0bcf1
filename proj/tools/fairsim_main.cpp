// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairsim/experiments.hpp"

namespace {

struct CliFlags {
  std::vector<double> deltas;
  std::vector<int> impressions;
  std::vector<double> lambdas;
  std::vector<double> costs;
  int pl_reps = 0;
  std::uint64_t seed = 0;
  double click_scale = 0.0;
  double persistence = 0.0;
  std::string out;
  std::string config_path;
};

void register_flags(CLI::App* cmd, CliFlags* flags) {
  cmd->add_option("--delta", flags->deltas, "Relevance spacing values");
  cmd->add_option("--impressions", flags->impressions, "Impression counts J");
  cmd->add_option("--lambda", flags->lambdas, "Fairness weights for the greedy policy");
  cmd->add_option("--cost", flags->costs, "Duplication cost multipliers k");
  cmd->add_option("--pl-reps", flags->pl_reps, "Plackett-Luce ensemble repetitions");
  cmd->add_option("--seed", flags->seed, "Base random seed");
  cmd->add_option("--c", flags->click_scale, "Cascade click scale");
  cmd->add_option("--gamma", flags->persistence, "Cascade persistence");
  cmd->add_option("--out", flags->out, "Output CSV path");
  cmd->add_option("--config", flags->config_path, "JSON config file (flags override it)")
      ->check(CLI::ExistingFile);
}

fairsim::ExperimentConfig build_config(const CLI::App& cmd, const CliFlags& flags,
                                       fairsim::ExperimentConfig base) {
  if (cmd.count("--config") > 0) {
    base = fairsim::parse_config(flags.config_path, base);
  }
  if (cmd.count("--delta") > 0) base.deltas = flags.deltas;
  if (cmd.count("--impressions") > 0) base.impressions = flags.impressions;
  if (cmd.count("--lambda") > 0) base.lambda_grid = flags.lambdas;
  if (cmd.count("--cost") > 0) base.costs = flags.costs;
  if (cmd.count("--pl-reps") > 0) base.pl_repetitions = flags.pl_reps;
  if (cmd.count("--seed") > 0) base.base_seed = flags.seed;
  if (cmd.count("--c") > 0) base.cascade.click_scale = flags.click_scale;
  if (cmd.count("--gamma") > 0) base.cascade.persistence = flags.persistence;
  if (cmd.count("--out") > 0) base.out_path = flags.out;
  base.validate();
  return base;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulates ranking policies over repeated query impressions and reports "
      "utility, exposure fairness and the extra attention earned by duplicated items."};
  app.require_subcommand(1);

  CliFlags tradeoff_flags;
  CLI::App* tradeoff =
      app.add_subcommand("tradeoff", "Greedy lambda sweep vs the Plackett-Luce baseline");
  register_flags(tradeoff, &tradeoff_flags);

  CliFlags duplication_flags;
  CLI::App* duplication =
      app.add_subcommand("duplication", "Extra attention earned by duplicating each item");
  register_flags(duplication, &duplication_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    fairsim::ResultTable table;
    std::string out_path;
    if (tradeoff->parsed()) {
      fairsim::ExperimentConfig config = build_config(*tradeoff, tradeoff_flags, {});
      table = fairsim::tradeoff_experiment(config);
      out_path = config.out_path.empty() ? "tradeoff.csv" : config.out_path;
    } else {
      fairsim::ExperimentConfig base;
      base.impressions = {100};       // the duplication analysis defaults to frequent queries
      base.lambda_grid = {0.5, 0.2, 0.0};  // greedy policies of the duplication analysis
      fairsim::ExperimentConfig config = build_config(*duplication, duplication_flags, base);
      std::vector<fairsim::PolicyConfig> policies;
      for (double l : config.lambda_grid) policies.push_back(fairsim::PolicyConfig::greedy(l));
      policies.push_back(fairsim::PolicyConfig::plackett_luce());
      table = fairsim::duplication_experiment(config, policies);
      out_path = config.out_path.empty() ? "duplication.csv" : config.out_path;
    }
    fairsim::emit_csv(table, out_path);
    std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
