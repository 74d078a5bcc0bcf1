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

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "fairsim/experiments.hpp"

using namespace fairsim;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.deltas = {0.25};
  config.impressions = {10};
  config.lambda_grid = {0.0, 0.5};
  config.costs = {1.0};
  config.pl_repetitions = 5;
  config.base_seed = 7;
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path(std::string("fairsim_test_") + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("experiments");

TEST_CASE("tradeoff row count follows the grid arithmetic") {
  const ExperimentConfig config;  // defaults
  ExperimentConfig quick = config;
  quick.pl_repetitions = 3;
  const ResultTable table = tradeoff_experiment(quick);
  // per (delta, J): 11 lambdas x 2 metrics + 6 ensemble rows
  CHECK(table.rows.size() == 3 * 2 * (11 * 2 + 6));
  CHECK(table.schema == CsvSchema::Tradeoff);
}

TEST_CASE("tradeoff lambda-zero rows have unit utility") {
  const ResultTable table = tradeoff_experiment(small_config());
  bool seen = false;
  for (const ResultRow& row : table.rows) {
    if (row.policy == "greedy" && row.lambda == 0.0 && row.metric == "mean_utility") {
      CHECK(row.value == 1.0);
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("greedy unfairness falls from lambda 0.1 to 0.3 at delta 0.25") {
  const ItemCatalog catalog = build_catalog({0.25, 5});
  const double at_01 = run(PolicyConfig::greedy(0.1), catalog, 100).final_unfairness;
  const double at_03 = run(PolicyConfig::greedy(0.3), catalog, 100).final_unfairness;
  CHECK(at_03 < at_01);
}

TEST_CASE("duplication row count follows the grid arithmetic") {
  ExperimentConfig config = small_config();
  config.impressions = {20};
  config.costs = {1.0, 0.5};
  const ResultTable table =
      duplication_experiment(config, {PolicyConfig::greedy(0.5), PolicyConfig::greedy(0.0)});
  // per (delta, J, policy, cost): 5 attention + 5 pair sums + 5 gains
  CHECK(table.rows.size() == 1 * 1 * 2 * 2 * 15);
  CHECK(table.schema == CsvSchema::Duplication);
}

TEST_CASE("duplication no-duplicate rows leave the duplicate columns empty") {
  ExperimentConfig config = small_config();
  config.impressions = {20};
  const ResultTable table = duplication_experiment(config, {PolicyConfig::greedy(0.0)});
  for (const ResultRow& row : table.rows) {
    if (row.metric == "attention") {
      CHECK_FALSE(row.duplicated_item.has_value());
      CHECK(row.item.has_value());
    } else {
      CHECK(row.duplicated_item.has_value());
      CHECK(row.duplicated_item == row.item);
    }
    CHECK(row.cost_k.has_value());
  }
}

TEST_CASE("emit_csv writes a header-only file for an empty table") {
  TempFile file("empty.csv");
  emit_csv(ResultTable{CsvSchema::Tradeoff, {}}, file.path);
  CHECK(read_file(file.path) ==
        "experiment,delta,impressions,policy,lambda,metric,value,seed\n");
}

TEST_CASE("identical tables serialize byte-identically") {
  const ExperimentConfig config = small_config();
  TempFile a("a.csv"), b("b.csv");
  emit_csv(tradeoff_experiment(config), a.path);
  emit_csv(tradeoff_experiment(config), b.path);
  const std::string bytes = read_file(a.path);
  CHECK(bytes == read_file(b.path));
  CHECK(bytes.find("tradeoff,0.25,10,greedy,0,") != std::string::npos);
}

TEST_CASE("csv lines round-trip through parse and serialize") {
  std::mt19937 rng(2025);
  std::uniform_real_distribution<double> value(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    ResultRow row;
    row.experiment = "duplication";
    row.delta = 0.05 + 0.01 * (t % 20);
    row.impressions = 1 + t;
    row.policy = t % 2 ? "greedy" : "plackett_luce";
    if (t % 2) row.lambda = (t % 11) * 0.05;
    if (t % 3) row.cost_k = 0.5;
    if (t % 4) row.duplicated_item = t % 5;
    row.item = t % 5;
    row.metric = "duplication_gain";
    row.value = value(rng);
    row.seed = static_cast<std::uint64_t>(t) * 1234567;
    const std::string line = to_csv_line(row, CsvSchema::Duplication);
    const ResultRow parsed = parse_csv_line(line, CsvSchema::Duplication);
    CHECK(to_csv_line(parsed, CsvSchema::Duplication) == line);
  }
  CHECK_THROWS_AS(parse_csv_line("a,b,c", CsvSchema::Tradeoff), std::invalid_argument);
}

TEST_CASE("config files override defaults and flag errors name the key") {
  TempFile file("config.json");
  {
    std::ofstream out(file.path);
    out << R"({"delta": [0.05], "impressions": 20, "lambda": [0.0, 0.5],
               "cost": 0.5, "pl-reps": 9, "seed": 123, "c": 0.6, "gamma": 0.4,
               "out": "results.csv"})";
  }
  const ExperimentConfig config = parse_config(file.path);
  CHECK(config.deltas == std::vector<double>{0.05});
  CHECK(config.impressions == std::vector<int>{20});
  CHECK(config.lambda_grid == std::vector<double>{0.0, 0.5});
  CHECK(config.costs == std::vector<double>{0.5});
  CHECK(config.pl_repetitions == 9);
  CHECK(config.base_seed == 123);
  CHECK(config.cascade.click_scale == 0.6);
  CHECK(config.cascade.persistence == 0.4);
  CHECK(config.out_path == "results.csv");

  ExperimentConfig base;
  base.impressions = {100};
  TempFile partial("partial.json");
  {
    std::ofstream out(partial.path);
    out << R"({"delta": 0.125})";
  }
  const ExperimentConfig merged = parse_config(partial.path, base);
  CHECK(merged.deltas == std::vector<double>{0.125});
  CHECK(merged.impressions == std::vector<int>{100});

  TempFile bad_key("bad_key.json");
  {
    std::ofstream out(bad_key.path);
    out << R"({"deltas": [0.25]})";
  }
  CHECK_THROWS_WITH_AS(parse_config(bad_key.path), doctest::Contains("deltas"),
                       std::runtime_error);

  TempFile bad_type("bad_type.json");
  {
    std::ofstream out(bad_type.path);
    out << R"({"delta": "big"})";
  }
  CHECK_THROWS_WITH_AS(parse_config(bad_type.path), doctest::Contains("delta"),
                       std::runtime_error);

  TempFile malformed("malformed.json");
  {
    std::ofstream out(malformed.path);
    out << "{delta:";
  }
  CHECK_THROWS_AS(parse_config(malformed.path), std::runtime_error);
  CHECK_THROWS_AS(parse_config("does_not_exist.json"), std::runtime_error);
}

TEST_CASE("config validation names the offending field") {
  ExperimentConfig config;
  config.deltas = {0.4};
  CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("delta"), std::invalid_argument);
  config = ExperimentConfig{};
  config.costs = {0.0};
  CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("cost"), std::invalid_argument);
  config = ExperimentConfig{};
  config.pl_repetitions = 0;
  CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("pl-reps"),
                       std::invalid_argument);
  config = ExperimentConfig{};
  config.lambda_grid = {1.5};
  CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("lambda"),
                       std::invalid_argument);
}

TEST_CASE("emit_csv reports unwritable paths") {
  CHECK_THROWS_AS(emit_csv(ResultTable{}, "no_such_dir/out.csv"), std::runtime_error);
}

TEST_SUITE_END();
