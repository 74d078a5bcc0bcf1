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

#ifndef FAIRSIM_FAIRNESS_HPP_
#define FAIRSIM_FAIRNESS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace fairsim {

/// Per-item shares in [0, 1] summing to 1.
using ShareVector = std::vector<double>;

/// Cumulative per-item attention and relevance over the impressions of one
/// query, plus the running sum of per-impression normalized utilities.
/// A plain value type: mutation is confined to add_impression.
class ExposureLedger {
 public:
  ExposureLedger() = default;
  explicit ExposureLedger(std::size_t item_count)
      : attention_(item_count, 0.0), relevance_(item_count, 0.0) {}

  /// Credits one impression: adds the per-item attention and relevance
  /// vectors and accumulates the impression's normalized utility.
  /// Throws std::invalid_argument on size mismatch or negative entries.
  void add_impression(std::span<const double> attention_by_item,
                      std::span<const double> relevance_by_item,
                      double normalized_utility);

  const std::vector<double>& attention() const { return attention_; }
  const std::vector<double>& relevance() const { return relevance_; }
  int impressions() const { return impressions_; }
  double utility_sum() const { return utility_sum_; }

  /// utility_sum / impressions. Throws std::invalid_argument before the
  /// first impression is committed.
  double mean_utility() const;

  std::size_t item_count() const { return attention_.size(); }

 private:
  std::vector<double> attention_;
  std::vector<double> relevance_;
  int impressions_ = 0;
  double utility_sum_ = 0.0;
};

/// Each entry divided by the total. Throws std::invalid_argument for an
/// empty vector or negative entries, std::domain_error when all entries
/// are zero (degenerate normalization).
ShareVector normalized_shares(std::span<const double> values);

/// l2 norm of the difference between attention shares and relevance
/// shares. Zero iff the shares agree; at most sqrt(2). Throws
/// std::invalid_argument on length mismatch, std::domain_error when either
/// vector has zero total.
double unfairness(std::span<const double> attention, std::span<const double> relevance);

/// Negated unfairness.
double fairness(std::span<const double> attention, std::span<const double> relevance);

/// lambda * mean utility + (1 - lambda) * fairness(A, R); here lambda
/// weights the utility term. Ranking policies express their lambda as the
/// weight on fairness instead, so a greedy policy with fairness weight l
/// maximizes objective(1 - l) of the candidate ledger state.
/// Throws std::invalid_argument for lambda outside [0, 1] or a ledger
/// without impressions.
double objective(double lambda, const ExposureLedger& ledger);

}  // namespace fairsim

#endif  // FAIRSIM_FAIRNESS_HPP_
