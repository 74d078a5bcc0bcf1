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

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fairsim/simulation.hpp"
#include "oracles.hpp"

using namespace fairsim;

TEST_SUITE_BEGIN("simulation");

TEST_CASE("static relevance accumulates the closed-form attention") {
  const ItemCatalog catalog = build_catalog({0.05, 5});
  const RunResult result = run(PolicyConfig::static_relevance(), catalog, 100);
  CHECK(result.attention[0] == 100.0);
  CHECK(result.attention[4] == doctest::Approx(100 * 0.0009412453125).epsilon(1e-12));
  const double ratio = result.attention[0] / result.attention[4];
  CHECK(ratio > 1000.0);
  CHECK(ratio < 1150.0);
}

TEST_CASE("cumulative relevance is exactly J times the profile") {
  for (double delta : {0.25, 0.125, 0.05}) {
    const ItemCatalog catalog = build_catalog({delta, 5});
    const RunResult result = run(PolicyConfig::static_relevance(), catalog, 100);
    const std::vector<double> rel = catalog.relevances();
    for (std::size_t i = 0; i < rel.size(); ++i) {
      CHECK(result.relevance[i] == 100.0 * rel[i]);
    }
  }
}

TEST_CASE("a single impression reduces to that impression's attention") {
  const ItemCatalog catalog = build_catalog({0.125, 5});
  const RunResult result = run(PolicyConfig::static_relevance(), catalog, 1);
  const AttentionProfile exam = examination_vector(catalog.relevances());
  CHECK(result.attention == exam);  // static sort keeps catalog order here
  CHECK(result.final_unfairness ==
        doctest::Approx(unfairness(exam, catalog.relevances())).epsilon(1e-12));
  CHECK(result.per_impression_utilities == std::vector<double>{1.0});
}

TEST_CASE("attention credited per impression matches the examination profile") {
  std::mt19937 seed_rng(101);
  for (int t = 0; t < 30; ++t) {
    const ItemCatalog catalog = oracles::random_catalog(seed_rng, 5);
    RandomSource rng(seed_rng());
    const RunResult result = run(PolicyConfig::plackett_luce(), catalog, 1, {}, &rng);
    std::vector<double> credited = result.attention;
    std::sort(credited.begin(), credited.end(), std::greater<>());
    // One impression: the credited multiset is exactly one examination vector.
    AttentionProfile exam(catalog.size(), 0.0);
    bool matched = false;
    for (const auto& perm : enumerate_permutations(static_cast<int>(catalog.size()))) {
      std::vector<double> rel;
      for (ItemId slot : perm) rel.push_back(catalog.items()[slot].relevance);
      AttentionProfile candidate = examination_vector(rel);
      std::sort(candidate.begin(), candidate.end(), std::greater<>());
      if (candidate == credited) {
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("greedy lambda zero has unit utility on every impression") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  const RunResult result = run(PolicyConfig::greedy(0.0), catalog, 50);
  for (double u : result.per_impression_utilities) CHECK(u == 1.0);
  CHECK(result.mean_utility == 1.0);
}

TEST_CASE("runs are deterministic") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  RandomSource a(31), b(31), c(32);
  const RunResult ra = run(PolicyConfig::plackett_luce(), catalog, 40, {}, &a);
  const RunResult rb = run(PolicyConfig::plackett_luce(), catalog, 40, {}, &b);
  const RunResult rc = run(PolicyConfig::plackett_luce(), catalog, 40, {}, &c);
  CHECK(ra.attention == rb.attention);
  CHECK(ra.per_impression_utilities == rb.per_impression_utilities);
  CHECK(ra.final_unfairness == rb.final_unfairness);
  CHECK(ra.attention != rc.attention);
  CHECK(ra.seed == 31);
}

TEST_CASE("zero unfairness is unreachable when an item has zero relevance") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  RandomSource rng(5);
  CHECK(run(PolicyConfig::greedy(0.5), catalog, 100).final_unfairness > 0.0);
  CHECK(run(PolicyConfig::static_relevance(), catalog, 100).final_unfairness > 0.0);
  CHECK(run(PolicyConfig::plackett_luce(), catalog, 100, {}, &rng).final_unfairness > 0.0);
}

TEST_CASE("run validation") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  CHECK_THROWS_AS(run(PolicyConfig::plackett_luce(), catalog, 10), std::invalid_argument);
  CHECK_THROWS_AS(run(PolicyConfig::greedy(0.5), catalog, 0), std::invalid_argument);
  CHECK_THROWS_AS(run(PolicyConfig::greedy(0.5), ItemCatalog{}, 10), std::invalid_argument);
  std::vector<CatalogItem> zeros{{0, 0.0, std::nullopt}, {1, 0.0, std::nullopt}};
  CHECK_THROWS_AS(run(PolicyConfig::static_relevance(), ItemCatalog{zeros}, 10),
                  std::domain_error);
}

TEST_CASE("nearest rank percentile") {
  const std::vector<double> values{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(nearest_rank_percentile(values, 5.0) == 1.0);
  CHECK(nearest_rank_percentile(values, 50.0) == 5.0);
  CHECK(nearest_rank_percentile(values, 95.0) == 10.0);
  CHECK(nearest_rank_percentile(values, 100.0) == 10.0);
  CHECK(nearest_rank_percentile(values, 0.0) == 1.0);
  CHECK(nearest_rank_percentile({2.5}, 50.0) == 2.5);
  CHECK_THROWS_AS(nearest_rank_percentile({}, 50.0), std::invalid_argument);
  CHECK_THROWS_AS(nearest_rank_percentile({1.0}, 101.0), std::invalid_argument);
}

TEST_CASE("pl_ensemble percentiles are ordered and reproducible") {
  const ItemCatalog catalog = build_catalog({0.125, 5});
  const EnsembleSummary one = pl_ensemble(catalog, 20, 1, 77);
  CHECK(one.utility_p5 == one.utility_median);
  CHECK(one.utility_median == one.utility_p95);
  CHECK(one.unfairness_p5 == one.unfairness_median);

  const EnsembleSummary a = pl_ensemble(catalog, 20, 50, 7);
  const EnsembleSummary b = pl_ensemble(catalog, 20, 50, 7);
  CHECK(a.utility_p5 == b.utility_p5);
  CHECK(a.utility_median == b.utility_median);
  CHECK(a.utility_p95 == b.utility_p95);
  CHECK(a.unfairness_p5 == b.unfairness_p5);
  CHECK(a.unfairness_median == b.unfairness_median);
  CHECK(a.unfairness_p95 == b.unfairness_p95);

  CHECK(a.utility_p5 <= a.utility_median);
  CHECK(a.utility_median <= a.utility_p95);
  CHECK(a.unfairness_p5 <= a.unfairness_median);
  CHECK(a.unfairness_median <= a.unfairness_p95);
  CHECK(a.repetitions == 50);
}

TEST_CASE("duplication gain is positive for the static policy") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  const RunResult base = run(PolicyConfig::static_relevance(), catalog, 100);
  for (ItemId target = 0; target < 5; ++target) {
    const ItemCatalog dup_catalog = duplicate(catalog, {target, 0.5});
    const RunResult dup = run(PolicyConfig::static_relevance(), dup_catalog, 100);
    const DuplicationGain stats = duplication_gain(dup, base, target);
    CHECK(stats.gain > 0.0);
    CHECK(stats.pair_sum == doctest::Approx(stats.baseline + stats.gain).epsilon(1e-12));
  }
}

TEST_CASE("duplication gain validates the scenario pairing") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  const RunResult base = run(PolicyConfig::static_relevance(), catalog, 50);
  CHECK_THROWS_AS(duplication_gain(base, base, 0), std::invalid_argument);

  const ItemCatalog dup_catalog = duplicate(catalog, {1, 1.0});
  const RunResult dup = run(PolicyConfig::static_relevance(), dup_catalog, 50);
  CHECK_THROWS_AS(duplication_gain(dup, dup, 1), std::invalid_argument);
  CHECK_THROWS_AS(duplication_gain(dup, base, 0), std::invalid_argument);  // wrong target
  const RunResult other_j = run(PolicyConfig::static_relevance(), catalog, 25);
  CHECK_THROWS_AS(duplication_gain(dup, other_j, 1), std::invalid_argument);
  const RunResult other_policy = run(PolicyConfig::greedy(0.0), catalog, 50);
  CHECK_THROWS_AS(duplication_gain(dup, other_policy, 1), std::invalid_argument);
}

TEST_SUITE_END();
