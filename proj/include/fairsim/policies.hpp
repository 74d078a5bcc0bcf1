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

#ifndef FAIRSIM_POLICIES_HPP_
#define FAIRSIM_POLICIES_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fairsim/browsing.hpp"
#include "fairsim/fairness.hpp"
#include "fairsim/scenario.hpp"

namespace fairsim {

/// Largest catalog the exhaustive policies enumerate (8! = 40320).
inline constexpr int kMaxEnumerationItems = 8;

/// Identity and parameters of a ranking policy. `lambda` is the weight on
/// the fairness term of the greedy step objective: lambda = 0 ranks purely
/// by relevance, larger values trade utility for equity of exposure.
struct PolicyConfig {
  enum class Kind { Greedy, PlackettLuce, StaticRelevance };

  Kind kind = Kind::StaticRelevance;
  double lambda = 0.0;  // meaningful for Greedy only

  static PolicyConfig greedy(double lambda);
  static PolicyConfig plackett_luce() { return {Kind::PlackettLuce, 0.0}; }
  static PolicyConfig static_relevance() { return {Kind::StaticRelevance, 0.0}; }

  std::string_view name() const;

  bool operator==(const PolicyConfig&) const = default;
};

/// Seeded random stream; identical seeds yield identical draw sequences on
/// every platform. Not for sharing across threads.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1).
  double next_unit();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Items sorted by decreasing relevance, ties broken by ascending id.
/// Identical output on every impression.
Ranking static_relevance(const ItemCatalog& catalog);

/// Samples a ranking without replacement, each draw proportional to the
/// remaining items' relevance; an all-zero remainder is drawn uniformly.
Ranking pl_sample(const ItemCatalog& catalog, RandomSource& rng);

/// The permutation maximizing the one-step objective
///   (1 - lambda) * (utility_sum + normalized_err(rho)) / horizon
///       + lambda * fairness(A + a(rho), R + r)
/// over every permutation of the catalog, where a(rho) credits each item
/// with the examination probability of its position and r is the
/// per-impression relevance vector. `horizon` is the total number of
/// impressions the utility will be averaged over; 0 means the impressions
/// committed so far plus this one (a pure running mean). Ties resolve to
/// the lexicographically smallest permutation by item id. Throws
/// std::length_error beyond the enumeration bound and std::domain_error
/// for a catalog whose ideal ERR is zero.
Ranking greedy_next(const ExposureLedger& ledger, const ItemCatalog& catalog,
                    double lambda, const CascadeParams& params = {}, int horizon = 0);

/// All permutations of {0, ..., n-1} in lexicographic order. Throws
/// std::length_error for n outside [1, kMaxEnumerationItems].
std::vector<std::vector<ItemId>> enumerate_permutations(int n);

}  // namespace fairsim

#endif  // FAIRSIM_POLICIES_HPP_
