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

#include "fairsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fairsim/fairness.hpp"

namespace fairsim {

RunResult run(const PolicyConfig& policy, const ItemCatalog& catalog, int impressions,
              const CascadeParams& params, RandomSource* rng) {
  if (impressions < 1) {
    throw std::invalid_argument("run: impressions must be >= 1");
  }
  if (catalog.empty()) {
    throw std::invalid_argument("run: empty catalog");
  }
  if (policy.kind == PolicyConfig::Kind::PlackettLuce && rng == nullptr) {
    throw std::invalid_argument("run: the Plackett-Luce policy requires a random source");
  }
  const double ideal = ideal_err(catalog, params);
  if (!(ideal > 0.0)) {
    throw std::domain_error("run: the catalog's ideal ERR is zero");
  }

  const std::size_t n = catalog.size();
  const std::vector<double> item_relevance = catalog.relevances();
  ExposureLedger ledger(n);
  std::vector<double> attention_by_item(n);

  RunResult result;
  result.per_impression_utilities.reserve(static_cast<std::size_t>(impressions));

  for (int j = 0; j < impressions; ++j) {
    Ranking ranking;
    switch (policy.kind) {
      case PolicyConfig::Kind::Greedy:
        ranking = greedy_next(ledger, catalog, policy.lambda, params, impressions);
        break;
      case PolicyConfig::Kind::PlackettLuce:
        ranking = pl_sample(catalog, *rng);
        break;
      case PolicyConfig::Kind::StaticRelevance:
        ranking = static_relevance(catalog);
        break;
    }
    const std::vector<double> rel_in_order = catalog.relevances_in(ranking);
    const AttentionProfile exam = examination_vector(rel_in_order, params);
    std::fill(attention_by_item.begin(), attention_by_item.end(), 0.0);
    for (std::size_t p = 0; p < n; ++p) {
      attention_by_item[catalog.index_of(ranking.order[p])] += exam[p];
    }
    const double utility = err(rel_in_order, params) / ideal;
    ledger.add_impression(attention_by_item, item_relevance, utility);
    result.per_impression_utilities.push_back(utility);
  }

  result.catalog = catalog;
  result.policy = policy;
  result.params = params;
  result.impressions = impressions;
  if (policy.kind == PolicyConfig::Kind::PlackettLuce) {
    result.seed = rng->seed();
  }
  result.attention = ledger.attention();
  // Relevance is constant per impression; the closed form keeps R_i = J * r_i
  // exact instead of accumulating rounding from repeated addition.
  result.relevance.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.relevance[i] = static_cast<double>(impressions) * item_relevance[i];
  }
  result.mean_utility = ledger.mean_utility();
  result.final_unfairness = unfairness(result.attention, result.relevance);
  return result;
}

double nearest_rank_percentile(std::vector<double> values, double pct) {
  if (values.empty()) {
    throw std::invalid_argument("percentile of an empty sample");
  }
  if (!(pct >= 0.0 && pct <= 100.0)) {
    throw std::invalid_argument("percentile must be in [0, 100]");
  }
  std::sort(values.begin(), values.end());
  auto rank = static_cast<std::size_t>(
      std::ceil(pct / 100.0 * static_cast<double>(values.size())));
  if (rank < 1) rank = 1;
  return values[rank - 1];
}

EnsembleSummary pl_ensemble(const ItemCatalog& catalog, int impressions, int repetitions,
                            std::uint64_t base_seed, const CascadeParams& params) {
  if (repetitions < 1) {
    throw std::invalid_argument("pl_ensemble: repetitions must be >= 1");
  }
  std::vector<double> utilities;
  std::vector<double> unfairnesses;
  utilities.reserve(static_cast<std::size_t>(repetitions));
  unfairnesses.reserve(static_cast<std::size_t>(repetitions));
  for (int m = 0; m < repetitions; ++m) {
    RandomSource rng(base_seed + static_cast<std::uint64_t>(m));
    const RunResult result =
        run(PolicyConfig::plackett_luce(), catalog, impressions, params, &rng);
    utilities.push_back(result.mean_utility);
    unfairnesses.push_back(result.final_unfairness);
  }
  EnsembleSummary summary;
  summary.utility_p5 = nearest_rank_percentile(utilities, 5.0);
  summary.utility_median = nearest_rank_percentile(utilities, 50.0);
  summary.utility_p95 = nearest_rank_percentile(utilities, 95.0);
  summary.unfairness_p5 = nearest_rank_percentile(unfairnesses, 5.0);
  summary.unfairness_median = nearest_rank_percentile(unfairnesses, 50.0);
  summary.unfairness_p95 = nearest_rank_percentile(unfairnesses, 95.0);
  summary.repetitions = repetitions;
  return summary;
}

DuplicationGain duplication_gain(const RunResult& dup_result, const RunResult& base_result,
                                 ItemId target) {
  if (base_result.catalog.has_duplicate()) {
    throw std::invalid_argument("duplication_gain: the baseline run holds a duplicate");
  }
  const std::optional<ItemId> copy_id = dup_result.catalog.duplicate_id();
  if (!copy_id.has_value()) {
    throw std::invalid_argument("duplication_gain: the duplicated run holds no duplicate");
  }
  if (dup_result.catalog.item(*copy_id).duplicate_of != target) {
    throw std::invalid_argument("duplication_gain: the duplicate does not copy the target");
  }
  if (dup_result.catalog.size() != base_result.catalog.size() + 1) {
    throw std::invalid_argument("duplication_gain: catalog sizes do not pair up");
  }
  if (!(dup_result.policy == base_result.policy) ||
      dup_result.impressions != base_result.impressions ||
      !(dup_result.params == base_result.params)) {
    throw std::invalid_argument(
        "duplication_gain: runs must share policy, impressions and cascade parameters");
  }
  for (const auto& item : base_result.catalog.items()) {
    if (dup_result.catalog.item(item.id).relevance != item.relevance) {
      throw std::invalid_argument("duplication_gain: item relevances do not pair up");
    }
  }

  DuplicationGain out;
  out.pair_sum = dup_result.attention[dup_result.catalog.index_of(target)] +
                 dup_result.attention[dup_result.catalog.index_of(*copy_id)];
  out.baseline = base_result.attention[base_result.catalog.index_of(target)];
  out.gain = out.pair_sum - out.baseline;
  return out;
}

}  // namespace fairsim
