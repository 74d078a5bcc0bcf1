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

#include "fairsim/fairness.hpp"

#include <cmath>
#include <stdexcept>

namespace fairsim {

namespace {

double nonnegative_total(std::span<const double> values, const char* what) {
  double total = 0.0;
  for (double v : values) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument(std::string(what) + " entries must be nonnegative");
    }
    total += v;
  }
  return total;
}

}  // namespace

void ExposureLedger::add_impression(std::span<const double> attention_by_item,
                                    std::span<const double> relevance_by_item,
                                    double normalized_utility) {
  if (attention_by_item.size() != attention_.size() ||
      relevance_by_item.size() != relevance_.size()) {
    throw std::invalid_argument("impression vectors must match the ledger's item count");
  }
  if (!(normalized_utility >= 0.0)) {
    throw std::invalid_argument("normalized utility must be nonnegative");
  }
  nonnegative_total(attention_by_item, "attention");
  nonnegative_total(relevance_by_item, "relevance");
  for (std::size_t i = 0; i < attention_.size(); ++i) {
    attention_[i] += attention_by_item[i];
    relevance_[i] += relevance_by_item[i];
  }
  utility_sum_ += normalized_utility;
  ++impressions_;
}

double ExposureLedger::mean_utility() const {
  if (impressions_ < 1) {
    throw std::invalid_argument("mean utility undefined before the first impression");
  }
  return utility_sum_ / static_cast<double>(impressions_);
}

ShareVector normalized_shares(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("normalized_shares: empty vector");
  }
  const double total = nonnegative_total(values, "share");
  if (!(total > 0.0)) {
    throw std::domain_error("normalized_shares: all entries are zero");
  }
  ShareVector shares(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    shares[i] = values[i] / total;
  }
  return shares;
}

double unfairness(std::span<const double> attention, std::span<const double> relevance) {
  if (attention.size() != relevance.size()) {
    throw std::invalid_argument("unfairness: attention and relevance lengths differ");
  }
  if (attention.empty()) {
    throw std::invalid_argument("unfairness: empty vectors");
  }
  const double total_a = nonnegative_total(attention, "attention");
  const double total_r = nonnegative_total(relevance, "relevance");
  if (!(total_a > 0.0) || !(total_r > 0.0)) {
    throw std::domain_error("unfairness: a zero-total vector cannot be normalized");
  }
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < attention.size(); ++i) {
    const double diff = attention[i] / total_a - relevance[i] / total_r;
    sum_sq += diff * diff;
  }
  return std::sqrt(sum_sq);
}

double fairness(std::span<const double> attention, std::span<const double> relevance) {
  return -unfairness(attention, relevance);
}

double objective(double lambda, const ExposureLedger& ledger) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
  return lambda * ledger.mean_utility() +
         (1.0 - lambda) * fairness(ledger.attention(), ledger.relevance());
}

}  // namespace fairsim
