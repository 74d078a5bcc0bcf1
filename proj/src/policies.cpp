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

#include "fairsim/policies.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace fairsim {

PolicyConfig PolicyConfig::greedy(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
  return {Kind::Greedy, lambda};
}

std::string_view PolicyConfig::name() const {
  switch (kind) {
    case Kind::Greedy:
      return "greedy";
    case Kind::PlackettLuce:
      return "plackett_luce";
    case Kind::StaticRelevance:
      return "static_relevance";
  }
  return "unknown";
}

double RandomSource::next_unit() {
  // 53 random bits; uniform on [0, 1) and identical on every platform.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Ranking static_relevance(const ItemCatalog& catalog) {
  std::vector<ItemId> order = catalog.ids();
  std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    const double ra = catalog.item(a).relevance;
    const double rb = catalog.item(b).relevance;
    if (ra != rb) return ra > rb;
    return a < b;
  });
  return Ranking{std::move(order)};
}

Ranking pl_sample(const ItemCatalog& catalog, RandomSource& rng) {
  if (catalog.empty()) {
    throw std::invalid_argument("pl_sample: empty catalog");
  }
  std::vector<ItemId> remaining = catalog.ids();
  std::vector<double> weights;
  weights.reserve(remaining.size());
  for (ItemId id : remaining) weights.push_back(catalog.item(id).relevance);

  Ranking ranking;
  ranking.order.reserve(remaining.size());
  while (!remaining.empty()) {
    double total = 0.0;
    for (double w : weights) total += w;
    std::size_t pick = remaining.size() - 1;
    if (total > 0.0) {
      const double u = rng.next_unit() * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        cumulative += weights[i];
        if (u < cumulative) {
          pick = i;
          break;
        }
      }
    } else {
      // All remaining relevances are zero: draw uniformly.
      const auto idx = static_cast<std::size_t>(rng.next_unit() *
                                                static_cast<double>(remaining.size()));
      pick = std::min(idx, remaining.size() - 1);
    }
    ranking.order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + pick);
    weights.erase(weights.begin() + pick);
  }
  return ranking;
}

Ranking greedy_next(const ExposureLedger& ledger, const ItemCatalog& catalog,
                    double lambda, const CascadeParams& params, int horizon) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
  if (horizon != 0 && horizon < ledger.impressions() + 1) {
    throw std::invalid_argument("greedy_next: horizon must cover the committed impressions");
  }
  const std::size_t n = catalog.size();
  if (n == 0) {
    throw std::invalid_argument("greedy_next: empty catalog");
  }
  if (n > static_cast<std::size_t>(kMaxEnumerationItems)) {
    throw std::length_error("greedy_next: catalog exceeds the enumeration bound of " +
                            std::to_string(kMaxEnumerationItems) + " items");
  }
  if (ledger.item_count() != n) {
    throw std::invalid_argument("greedy_next: ledger does not match the catalog");
  }
  const double ideal = ideal_err(catalog, params);
  if (!(ideal > 0.0)) {
    throw std::domain_error("greedy_next: the catalog's ideal ERR is zero");
  }

  // Ascending ids so next_permutation walks lexicographic order; the first
  // strict maximum then is the lexicographically smallest tie.
  std::vector<ItemId> perm = catalog.ids();
  std::sort(perm.begin(), perm.end());

  std::unordered_map<ItemId, std::size_t> index_of;
  index_of.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_of.emplace(catalog.items()[i].id, i);

  std::vector<double> next_relevance = ledger.relevance();
  for (std::size_t i = 0; i < n; ++i) next_relevance[i] += catalog.items()[i].relevance;

  const double utility_span =
      static_cast<double>(horizon > 0 ? horizon : ledger.impressions() + 1);
  const double utility_sum = ledger.utility_sum();

  std::vector<double> candidate_attention(n);
  Ranking best;
  double best_score = -std::numeric_limits<double>::infinity();
  do {
    std::copy(ledger.attention().begin(), ledger.attention().end(),
              candidate_attention.begin());
    double exam = 1.0;
    double raw_err = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t idx = index_of.find(perm[p])->second;
      const double r = catalog.items()[idx].relevance;
      candidate_attention[idx] += exam;
      raw_err += exam * params.click_scale * r / static_cast<double>(p + 1);
      exam *= params.persistence * (1.0 - params.click_scale * r);
    }
    const double score =
        (1.0 - lambda) * (utility_sum + raw_err / ideal) / utility_span -
        lambda * unfairness(candidate_attention, next_relevance);
    if (score > best_score) {
      best_score = score;
      best.order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<ItemId>> enumerate_permutations(int n) {
  if (n < 1 || n > kMaxEnumerationItems) {
    throw std::length_error("enumerate_permutations: n must be in [1, " +
                            std::to_string(kMaxEnumerationItems) + "]");
  }
  std::vector<ItemId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<ItemId>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace fairsim
