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

#include "fairsim/browsing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace fairsim {

namespace {

void validate_params(const CascadeParams& params) {
  if (!(params.click_scale >= 0.0 && params.click_scale <= 1.0)) {
    throw std::invalid_argument("click_scale must be in [0, 1]");
  }
  if (!(params.persistence > 0.0 && params.persistence <= 1.0)) {
    throw std::invalid_argument("persistence must be in (0, 1]");
  }
}

void validate_relevances(std::span<const double> relevances) {
  if (relevances.empty()) {
    throw std::invalid_argument("relevance list must be non-empty");
  }
  for (std::size_t p = 0; p < relevances.size(); ++p) {
    if (!(relevances[p] >= 0.0 && relevances[p] <= 1.0)) {
      throw std::invalid_argument("relevance out of [0, 1] at position " +
                                  std::to_string(p + 1));
    }
  }
}

}  // namespace

AttentionProfile examination_vector(std::span<const double> relevances,
                                    const CascadeParams& params) {
  validate_params(params);
  validate_relevances(relevances);
  AttentionProfile attention(relevances.size());
  double exam = 1.0;
  for (std::size_t p = 0; p < relevances.size(); ++p) {
    attention[p] = exam;
    exam *= params.persistence * (1.0 - params.click_scale * relevances[p]);
  }
  return attention;
}

std::vector<double> stop_distribution(std::span<const double> relevances,
                                      const CascadeParams& params) {
  std::vector<double> stops = examination_vector(relevances, params);
  for (std::size_t p = 0; p < relevances.size(); ++p) {
    stops[p] *= params.click_scale * relevances[p];
  }
  return stops;
}

double err(std::span<const double> relevances, const CascadeParams& params) {
  validate_params(params);
  validate_relevances(relevances);
  double exam = 1.0;
  double total = 0.0;
  for (std::size_t p = 0; p < relevances.size(); ++p) {
    total += exam * params.click_scale * relevances[p] / static_cast<double>(p + 1);
    exam *= params.persistence * (1.0 - params.click_scale * relevances[p]);
  }
  return total;
}

double ideal_err(const ItemCatalog& catalog, const CascadeParams& params) {
  std::vector<double> rel = catalog.relevances();
  std::sort(rel.begin(), rel.end(), std::greater<>());
  return err(rel, params);
}

double normalized_err(const Ranking& ranking, const ItemCatalog& catalog,
                      const CascadeParams& params) {
  const double ideal = ideal_err(catalog, params);
  if (!(ideal > 0.0)) {
    throw std::domain_error("normalized ERR undefined: the catalog's ideal ERR is zero");
  }
  return err(catalog.relevances_in(ranking), params) / ideal;
}

}  // namespace fairsim
