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

#include "fairsim/experiments.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fairsim {

namespace {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string();
}

std::string format_optional(const std::optional<ItemId>& value) {
  return value ? std::to_string(*value) : std::string();
}

ResultRow make_row(const std::string& experiment, double delta, int impressions,
                   const PolicyConfig& policy, std::uint64_t seed) {
  ResultRow row;
  row.experiment = experiment;
  row.delta = delta;
  row.impressions = impressions;
  row.policy = std::string(policy.name());
  if (policy.kind == PolicyConfig::Kind::Greedy) row.lambda = policy.lambda;
  row.seed = seed;
  return row;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Per-repetition Plackett-Luce attention vectors for one catalog.
std::vector<std::vector<double>> pl_attention_samples(const ItemCatalog& catalog,
                                                      int impressions, int repetitions,
                                                      std::uint64_t base_seed,
                                                      const CascadeParams& params) {
  std::vector<std::vector<double>> samples;
  samples.reserve(static_cast<std::size_t>(repetitions));
  for (int m = 0; m < repetitions; ++m) {
    RandomSource rng(base_seed + static_cast<std::uint64_t>(m));
    samples.push_back(
        run(PolicyConfig::plackett_luce(), catalog, impressions, params, &rng).attention);
  }
  return samples;
}

std::vector<double> per_item_medians(const std::vector<std::vector<double>>& samples) {
  const std::size_t n = samples.front().size();
  std::vector<double> medians(n);
  std::vector<double> column(samples.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < samples.size(); ++m) column[m] = samples[m][i];
    medians[i] = nearest_rank_percentile(column, 50.0);
  }
  return medians;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (deltas.empty()) throw std::invalid_argument("deltas must be non-empty");
  if (impressions.empty()) throw std::invalid_argument("impressions must be non-empty");
  if (costs.empty()) throw std::invalid_argument("costs must be non-empty");
  for (double d : deltas) {
    if (!(d > 0.0 && d <= 0.25)) throw std::invalid_argument("delta must be in (0, 0.25]");
  }
  for (int j : impressions) {
    if (j < 1) throw std::invalid_argument("impressions must be positive");
  }
  for (double l : lambda_grid) {
    if (!(l >= 0.0 && l <= 1.0)) throw std::invalid_argument("lambda must be in [0, 1]");
  }
  for (double k : costs) {
    if (!(k > 0.0 && k <= 1.0)) throw std::invalid_argument("cost must be in (0, 1]");
  }
  if (pl_repetitions < 1) throw std::invalid_argument("pl-reps must be >= 1");
  if (item_count < 1) throw std::invalid_argument("item count must be positive");
  if (!(cascade.click_scale >= 0.0 && cascade.click_scale <= 1.0)) {
    throw std::invalid_argument("c must be in [0, 1]");
  }
  if (!(cascade.persistence > 0.0 && cascade.persistence <= 1.0)) {
    throw std::invalid_argument("gamma must be in (0, 1]");
  }
}

ResultTable tradeoff_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.lambda_grid.empty()) {
    throw std::invalid_argument("the tradeoff experiment needs a non-empty lambda grid");
  }
  ResultTable table{CsvSchema::Tradeoff, {}};
  for (double delta : config.deltas) {
    const ItemCatalog catalog = build_catalog({delta, config.item_count});
    for (int impressions : config.impressions) {
      for (double lambda : config.lambda_grid) {
        const PolicyConfig policy = PolicyConfig::greedy(lambda);
        const RunResult result = run(policy, catalog, impressions, config.cascade);
        ResultRow row = make_row("tradeoff", delta, impressions, policy, config.base_seed);
        row.metric = "unfairness";
        row.value = result.final_unfairness;
        table.rows.push_back(row);
        row.metric = "mean_utility";
        row.value = result.mean_utility;
        table.rows.push_back(row);
      }
      const EnsembleSummary summary = pl_ensemble(catalog, impressions, config.pl_repetitions,
                                                  config.base_seed, config.cascade);
      ResultRow row = make_row("tradeoff", delta, impressions,
                               PolicyConfig::plackett_luce(), config.base_seed);
      const std::pair<const char*, double> metrics[] = {
          {"utility_p5", summary.utility_p5},
          {"utility_p50", summary.utility_median},
          {"utility_p95", summary.utility_p95},
          {"unfairness_p5", summary.unfairness_p5},
          {"unfairness_p50", summary.unfairness_median},
          {"unfairness_p95", summary.unfairness_p95},
      };
      for (const auto& [name, value] : metrics) {
        row.metric = name;
        row.value = value;
        table.rows.push_back(row);
      }
    }
  }
  return table;
}

std::vector<PolicyConfig> default_duplication_policies() {
  return {PolicyConfig::greedy(0.5), PolicyConfig::greedy(0.2), PolicyConfig::greedy(0.0),
          PolicyConfig::plackett_luce()};
}

ResultTable duplication_experiment(const ExperimentConfig& config,
                                   const std::vector<PolicyConfig>& policies) {
  config.validate();
  if (policies.empty()) {
    throw std::invalid_argument("the duplication experiment needs at least one policy");
  }
  ResultTable table{CsvSchema::Duplication, {}};
  for (double delta : config.deltas) {
    const ItemCatalog base_catalog = build_catalog({delta, config.item_count});
    for (int impressions : config.impressions) {
      for (const PolicyConfig& policy : policies) {
        const bool sampled = policy.kind == PolicyConfig::Kind::PlackettLuce;

        // Baseline statistics do not depend on the duplication cost.
        RunResult base_run;
        std::vector<double> base_attention;
        if (sampled) {
          base_attention = per_item_medians(pl_attention_samples(
              base_catalog, impressions, config.pl_repetitions, config.base_seed,
              config.cascade));
        } else {
          base_run = run(policy, base_catalog, impressions, config.cascade);
          base_attention = base_run.attention;
        }

        for (double cost : config.costs) {
          for (const auto& item : base_catalog.items()) {
            ResultRow row = make_row("duplication", delta, impressions, policy,
                                     config.base_seed);
            row.cost_k = cost;
            row.item = item.id;
            row.metric = "attention";
            row.value = base_attention[base_catalog.index_of(item.id)];
            table.rows.push_back(row);
          }
          for (const auto& item : base_catalog.items()) {
            const ItemId target = item.id;
            const ItemCatalog dup_catalog = duplicate(base_catalog, {target, cost});
            double pair_sum = 0.0;
            double gain = 0.0;
            if (sampled) {
              const auto samples =
                  pl_attention_samples(dup_catalog, impressions, config.pl_repetitions,
                                       config.base_seed, config.cascade);
              const std::size_t target_idx = dup_catalog.index_of(target);
              const std::size_t copy_idx = dup_catalog.index_of(*dup_catalog.duplicate_id());
              std::vector<double> pair_sums(samples.size());
              for (std::size_t m = 0; m < samples.size(); ++m) {
                pair_sums[m] = samples[m][target_idx] + samples[m][copy_idx];
              }
              pair_sum = nearest_rank_percentile(pair_sums, 50.0);
              gain = pair_sum - base_attention[base_catalog.index_of(target)];
            } else {
              const RunResult dup_run = run(policy, dup_catalog, impressions, config.cascade);
              const DuplicationGain stats = duplication_gain(dup_run, base_run, target);
              pair_sum = stats.pair_sum;
              gain = stats.gain;
            }
            ResultRow row = make_row("duplication", delta, impressions, policy,
                                     config.base_seed);
            row.cost_k = cost;
            row.duplicated_item = target;
            row.item = target;
            row.metric = "pair_sum_attention";
            row.value = pair_sum;
            table.rows.push_back(row);
            row.metric = "duplication_gain";
            row.value = gain;
            table.rows.push_back(row);
          }
        }
      }
    }
  }
  return table;
}

std::string csv_header(CsvSchema schema) {
  switch (schema) {
    case CsvSchema::Tradeoff:
      return "experiment,delta,impressions,policy,lambda,metric,value,seed";
    case CsvSchema::Duplication:
      return "experiment,delta,impressions,policy,lambda,cost_k,duplicated_item,item,"
             "metric,value,seed";
  }
  throw std::invalid_argument("unknown CSV schema");
}

std::string to_csv_line(const ResultRow& row, CsvSchema schema) {
  std::string line = row.experiment;
  line += ',';
  line += format_number(row.delta);
  line += ',';
  line += std::to_string(row.impressions);
  line += ',';
  line += row.policy;
  line += ',';
  line += format_optional(row.lambda);
  if (schema == CsvSchema::Duplication) {
    line += ',';
    line += format_optional(row.cost_k);
    line += ',';
    line += format_optional(row.duplicated_item);
    line += ',';
    line += format_optional(row.item);
  }
  line += ',';
  line += row.metric;
  line += ',';
  line += format_number(row.value);
  line += ',';
  line += std::to_string(row.seed);
  return line;
}

ResultRow parse_csv_line(const std::string& line, CsvSchema schema) {
  const std::vector<std::string> fields = split_fields(line);
  const std::size_t expected = schema == CsvSchema::Tradeoff ? 8 : 11;
  if (fields.size() != expected) {
    throw std::invalid_argument("CSV line has " + std::to_string(fields.size()) +
                                " fields, expected " + std::to_string(expected));
  }
  ResultRow row;
  std::size_t f = 0;
  row.experiment = fields[f++];
  row.delta = std::stod(fields[f++]);
  row.impressions = std::stoi(fields[f++]);
  row.policy = fields[f++];
  if (const std::string& s = fields[f++]; !s.empty()) row.lambda = std::stod(s);
  if (schema == CsvSchema::Duplication) {
    if (const std::string& s = fields[f++]; !s.empty()) row.cost_k = std::stod(s);
    if (const std::string& s = fields[f++]; !s.empty()) row.duplicated_item = std::stoi(s);
    if (const std::string& s = fields[f++]; !s.empty()) row.item = std::stoi(s);
  }
  row.metric = fields[f++];
  row.value = std::stod(fields[f++]);
  row.seed = std::stoull(fields[f++]);
  return row;
}

void emit_csv(const ResultTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << csv_header(table.schema) << '\n';
  for (const ResultRow& row : table.rows) {
    out << to_csv_line(row, table.schema) << '\n';
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

namespace {

using nlohmann::json;

std::vector<double> as_double_list(const json& value, const std::string& key) {
  std::vector<double> out;
  if (value.is_number()) {
    out.push_back(value.get<double>());
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (!v.is_number()) {
        throw std::runtime_error("config key '" + key + "' must hold numbers");
      }
      out.push_back(v.get<double>());
    }
  } else {
    throw std::runtime_error("config key '" + key + "' must be a number or array of numbers");
  }
  if (out.empty()) {
    throw std::runtime_error("config key '" + key + "' must not be empty");
  }
  return out;
}

std::vector<int> as_int_list(const json& value, const std::string& key) {
  std::vector<int> out;
  for (double v : as_double_list(value, key)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw std::runtime_error("config key '" + key + "' must hold integers");
    }
    out.push_back(i);
  }
  return out;
}

double as_scalar(const json& value, const std::string& key) {
  if (!value.is_number()) {
    throw std::runtime_error("config key '" + key + "' must be a number");
  }
  return value.get<double>();
}

}  // namespace

ExperimentConfig parse_config(const std::string& path, const ExperimentConfig& base) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error("config file '" + path + "' must hold a JSON object");
  }

  ExperimentConfig config = base;
  for (const auto& [key, value] : doc.items()) {
    if (key == "delta") {
      config.deltas = as_double_list(value, key);
    } else if (key == "impressions") {
      config.impressions = as_int_list(value, key);
    } else if (key == "lambda") {
      config.lambda_grid = as_double_list(value, key);
    } else if (key == "cost") {
      config.costs = as_double_list(value, key);
    } else if (key == "pl-reps") {
      config.pl_repetitions = as_int_list(value, key).front();
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) {
        throw std::runtime_error("config key 'seed' must be an integer");
      }
      config.base_seed = value.get<std::uint64_t>();
    } else if (key == "c") {
      config.cascade.click_scale = as_scalar(value, key);
    } else if (key == "gamma") {
      config.cascade.persistence = as_scalar(value, key);
    } else if (key == "out") {
      if (!value.is_string()) {
        throw std::runtime_error("config key 'out' must be a string");
      }
      config.out_path = value.get<std::string>();
    } else {
      throw std::runtime_error("unknown config key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig parse_config(const std::string& path) {
  return parse_config(path, ExperimentConfig{});
}

}  // namespace fairsim
