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

#ifndef FAIRSIM_BROWSING_HPP_
#define FAIRSIM_BROWSING_HPP_

#include <span>
#include <vector>

#include "fairsim/scenario.hpp"

namespace fairsim {

/// Cascade user model: the user scans a ranking top to bottom, stops at the
/// current position with probability click_scale * relevance, and otherwise
/// continues downward with probability persistence.
struct CascadeParams {
  double click_scale = 0.7;  // in [0, 1]
  double persistence = 0.5;  // in (0, 1]

  bool operator==(const CascadeParams&) const = default;
};

/// Per-position examination probabilities; index p holds position p + 1.
using AttentionProfile = std::vector<double>;

/// Probability that the user examines each position:
///   a(1) = 1,  a(p+1) = a(p) * persistence * (1 - click_scale * r_p).
/// Values are non-increasing and lie in [0, 1]. This is the attention an
/// item ranked at that position is credited with (crediting the stop
/// probability instead is a documented variant, not implemented).
/// Throws std::invalid_argument for an empty list or a relevance outside
/// [0, 1].
AttentionProfile examination_vector(std::span<const double> relevances_in_rank_order,
                                    const CascadeParams& params = {});

/// Probability that the user stops at each position:
///   stop(p) = a(p) * click_scale * r_p.
/// The total stop mass is at most 1; the remainder is abandonment.
std::vector<double> stop_distribution(std::span<const double> relevances_in_rank_order,
                                      const CascadeParams& params = {});

/// Expected reciprocal rank under the cascade model: sum_p stop(p) / p.
double err(std::span<const double> relevances_in_rank_order,
           const CascadeParams& params = {});

/// ERR of the catalog sorted by decreasing relevance; the normalization
/// denominator for normalized_err. Zero iff the model can never stop.
double ideal_err(const ItemCatalog& catalog, const CascadeParams& params = {});

/// err(ranking) / ideal_err(catalog). Equals 1 for a relevance-sorted
/// ranking and never exceeds 1. Throws std::domain_error when the ideal
/// ERR is zero (degenerate catalog, e.g. all relevances zero) and
/// std::invalid_argument when `ranking` is not a permutation of the
/// catalog.
double normalized_err(const Ranking& ranking, const ItemCatalog& catalog,
                      const CascadeParams& params = {});

}  // namespace fairsim

#endif  // FAIRSIM_BROWSING_HPP_
