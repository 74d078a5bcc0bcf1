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

#ifndef FAIRSIM_SIMULATION_HPP_
#define FAIRSIM_SIMULATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fairsim/browsing.hpp"
#include "fairsim/policies.hpp"
#include "fairsim/scenario.hpp"

namespace fairsim {

/// Outcome of one policy simulated over J impressions of a single query.
struct RunResult {
  ItemCatalog catalog;
  PolicyConfig policy;
  CascadeParams params;
  int impressions = 0;
  std::optional<std::uint64_t> seed;  // present for sampled policies

  std::vector<double> attention;  // cumulative A_i, catalog order
  std::vector<double> relevance;  // cumulative R_i = J * r_i, catalog order
  std::vector<double> per_impression_utilities;
  double mean_utility = 0.0;
  double final_unfairness = 0.0;
};

/// Simulates `impressions` repetitions of the query: each impression asks
/// the policy for a ranking, credits every item with the examination
/// probability of its position, credits its relevance, and records the
/// impression's normalized ERR. Plackett-Luce requires `rng`; the
/// deterministic policies ignore it.
RunResult run(const PolicyConfig& policy, const ItemCatalog& catalog, int impressions,
              const CascadeParams& params = {}, RandomSource* rng = nullptr);

/// Percentile summary of repeated Plackett-Luce runs.
struct EnsembleSummary {
  double utility_p5 = 0.0;
  double utility_median = 0.0;
  double utility_p95 = 0.0;
  double unfairness_p5 = 0.0;
  double unfairness_median = 0.0;
  double unfairness_p95 = 0.0;
  int repetitions = 0;
};

/// Runs `repetitions` independent Plackett-Luce simulations with derived
/// seeds base_seed + m and summarizes mean utility and final unfairness
/// with nearest-rank percentiles.
EnsembleSummary pl_ensemble(const ItemCatalog& catalog, int impressions, int repetitions,
                            std::uint64_t base_seed, const CascadeParams& params = {});

/// Nearest-rank percentile: the value at rank ceil(pct/100 * n) of the
/// sorted sample (1-based, clamped to the first element).
double nearest_rank_percentile(std::vector<double> values, double pct);

/// Extra attention earned by duplicating `target`: the duplicated run's
/// pair sum A_target + A_copy against the baseline run's A_target.
struct DuplicationGain {
  double pair_sum = 0.0;
  double baseline = 0.0;
  double gain = 0.0;  // pair_sum - baseline
};

/// Compares a duplicated-scenario run against its no-duplicate baseline
/// under the same policy, impressions and cascade parameters. Throws
/// std::invalid_argument when the two runs are not such a pair.
DuplicationGain duplication_gain(const RunResult& dup_result, const RunResult& base_result,
                                 ItemId target);

}  // namespace fairsim

#endif  // FAIRSIM_SIMULATION_HPP_
