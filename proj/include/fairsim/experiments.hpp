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

#ifndef FAIRSIM_EXPERIMENTS_HPP_
#define FAIRSIM_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairsim/browsing.hpp"
#include "fairsim/policies.hpp"
#include "fairsim/simulation.hpp"

namespace fairsim {

/// Parameter grid for the experiment harness.
struct ExperimentConfig {
  std::vector<double> deltas{0.25, 0.125, 0.05};
  std::vector<int> impressions{20, 100};
  std::vector<double> lambda_grid{0.0,  0.05, 0.1,  0.15, 0.2, 0.25,
                                  0.3,  0.35, 0.4,  0.45, 0.5};
  std::vector<double> costs{1.0, 0.5};
  int pl_repetitions = 1000;
  std::uint64_t base_seed = 42;
  CascadeParams cascade{};
  int item_count = 5;
  std::string out_path;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

enum class CsvSchema { Tradeoff, Duplication };

/// One metric of one grid cell, in long format.
struct ResultRow {
  std::string experiment;
  double delta = 0.0;
  int impressions = 0;
  std::string policy;
  std::optional<double> lambda;
  std::optional<double> cost_k;         // duplication schema only
  std::optional<ItemId> duplicated_item;  // duplication schema only
  std::optional<ItemId> item;             // duplication schema only
  std::string metric;
  double value = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
  CsvSchema schema = CsvSchema::Tradeoff;
  std::vector<ResultRow> rows;
};

/// Unfairness / mean-utility pairs for the greedy policy across the lambda
/// grid, plus Plackett-Luce ensemble percentiles, per (delta, impressions)
/// cell. No duplicates in these catalogs.
ResultTable tradeoff_experiment(const ExperimentConfig& config);

/// The policy set of the duplication analysis: greedy at lambda 0.5, 0.2
/// and 0, plus Plackett-Luce.
std::vector<PolicyConfig> default_duplication_policies();

/// Per (policy, delta, impressions, cost): baseline per-item attention,
/// and per duplicated target the pair sum A_target + A_copy and the gain
/// over the baseline. Plackett-Luce rows carry ensemble medians of the
/// same statistics (the gain is the median pair sum minus the median
/// baseline attention).
ResultTable duplication_experiment(const ExperimentConfig& config,
                                   const std::vector<PolicyConfig>& policies =
                                       default_duplication_policies());

std::string csv_header(CsvSchema schema);
std::string to_csv_line(const ResultRow& row, CsvSchema schema);
ResultRow parse_csv_line(const std::string& line, CsvSchema schema);

/// Writes the header and one line per row; numbers carry 12 significant
/// digits so identical tables serialize to identical bytes.
void emit_csv(const ResultTable& table, const std::string& path);

/// Loads a JSON object of scalars and arrays whose keys match the CLI
/// flags (delta, impressions, lambda, cost, pl-reps, seed, c, gamma, out)
/// on top of `base`. Throws std::runtime_error naming the offending key.
ExperimentConfig parse_config(const std::string& path, const ExperimentConfig& base);
ExperimentConfig parse_config(const std::string& path);

}  // namespace fairsim

#endif  // FAIRSIM_EXPERIMENTS_HPP_
