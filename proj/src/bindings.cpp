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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fairsim/browsing.hpp"
#include "fairsim/experiments.hpp"
#include "fairsim/fairness.hpp"
#include "fairsim/policies.hpp"
#include "fairsim/scenario.hpp"
#include "fairsim/simulation.hpp"

namespace py = pybind11;

using namespace fairsim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fair-ranking exposure simulator: cascade browsing model, ranking "
            "policies and duplication experiments.";

  // scenario
  py::class_<CatalogItem>(m, "CatalogItem")
      .def(py::init<>())
      .def(py::init([](ItemId id, double relevance, std::optional<ItemId> duplicate_of) {
             return CatalogItem{id, relevance, duplicate_of};
           }),
           py::arg("id"), py::arg("relevance"), py::arg("duplicate_of") = std::nullopt)
      .def_readwrite("id", &CatalogItem::id)
      .def_readwrite("relevance", &CatalogItem::relevance)
      .def_readwrite("duplicate_of", &CatalogItem::duplicate_of)
      .def("is_duplicate", &CatalogItem::is_duplicate)
      .def("__eq__", [](const CatalogItem& a, const CatalogItem& b) { return a == b; });

  py::class_<Ranking>(m, "Ranking")
      .def(py::init<>())
      .def(py::init([](std::vector<ItemId> order) { return Ranking{std::move(order)}; }),
           py::arg("order"))
      .def_readwrite("order", &Ranking::order)
      .def("__eq__", [](const Ranking& a, const Ranking& b) { return a == b; })
      .def("__len__", [](const Ranking& r) { return r.order.size(); });

  py::class_<ItemCatalog>(m, "ItemCatalog")
      .def(py::init<>())
      .def(py::init<std::vector<CatalogItem>>(), py::arg("items"))
      .def("__len__", &ItemCatalog::size)
      .def("items", &ItemCatalog::items)
      .def("item", &ItemCatalog::item, py::arg("id"))
      .def("index_of", &ItemCatalog::index_of, py::arg("id"))
      .def("has_duplicate", &ItemCatalog::has_duplicate)
      .def("duplicate_id", &ItemCatalog::duplicate_id)
      .def("ids", &ItemCatalog::ids)
      .def("relevances", &ItemCatalog::relevances)
      .def("relevances_in", &ItemCatalog::relevances_in, py::arg("ranking"));

  py::class_<RelevanceProfile>(m, "RelevanceProfile")
      .def(py::init([](double delta, int item_count) {
             return RelevanceProfile{delta, item_count};
           }),
           py::arg("delta"), py::arg("item_count") = 5)
      .def_readwrite("delta", &RelevanceProfile::delta)
      .def_readwrite("item_count", &RelevanceProfile::item_count);

  py::class_<DuplicationSpec>(m, "DuplicationSpec")
      .def(py::init([](std::optional<ItemId> target, double cost) {
             return DuplicationSpec{target, cost};
           }),
           py::arg("target") = std::nullopt, py::arg("cost") = 1.0)
      .def_readwrite("target", &DuplicationSpec::target)
      .def_readwrite("cost", &DuplicationSpec::cost);

  py::class_<ScenarioDescriptor>(m, "ScenarioDescriptor")
      .def(py::init<>())
      .def_readwrite("delta", &ScenarioDescriptor::delta)
      .def_readwrite("cost_k", &ScenarioDescriptor::cost_k)
      .def_readwrite("impressions", &ScenarioDescriptor::impressions)
      .def_readwrite("lambda_", &ScenarioDescriptor::lambda)
      .def_readwrite("duplicated_item", &ScenarioDescriptor::duplicated_item)
      .def_readwrite("item_count", &ScenarioDescriptor::item_count);

  m.def("build_catalog",
        [](double delta, int item_count) {
          return build_catalog({delta, item_count});
        },
        py::arg("delta"), py::arg("item_count") = 5);
  m.def("duplicate",
        [](const ItemCatalog& catalog, std::optional<ItemId> target, double cost) {
          return duplicate(catalog, {target, cost});
        },
        py::arg("catalog"), py::arg("target"), py::arg("cost") = 1.0);
  m.def("settings_grid", &settings_grid, py::arg("deltas"), py::arg("costs"),
        py::arg("impressions"), py::arg("lambdas"), py::arg("item_count") = 5);

  // browsing
  py::class_<CascadeParams>(m, "CascadeParams")
      .def(py::init([](double click_scale, double persistence) {
             return CascadeParams{click_scale, persistence};
           }),
           py::arg("click_scale") = 0.7, py::arg("persistence") = 0.5)
      .def_readwrite("click_scale", &CascadeParams::click_scale)
      .def_readwrite("persistence", &CascadeParams::persistence);

  m.def("examination_vector",
        [](const std::vector<double>& rel, const CascadeParams& params) {
          return examination_vector(rel, params);
        },
        py::arg("relevances_in_rank_order"), py::arg("params") = CascadeParams{});
  m.def("stop_distribution",
        [](const std::vector<double>& rel, const CascadeParams& params) {
          return stop_distribution(rel, params);
        },
        py::arg("relevances_in_rank_order"), py::arg("params") = CascadeParams{});
  m.def("err",
        [](const std::vector<double>& rel, const CascadeParams& params) {
          return err(rel, params);
        },
        py::arg("relevances_in_rank_order"), py::arg("params") = CascadeParams{});
  m.def("ideal_err", &ideal_err, py::arg("catalog"), py::arg("params") = CascadeParams{});
  m.def("normalized_err", &normalized_err, py::arg("ranking"), py::arg("catalog"),
        py::arg("params") = CascadeParams{});

  // fairness
  py::class_<ExposureLedger>(m, "ExposureLedger")
      .def(py::init<std::size_t>(), py::arg("item_count"))
      .def("add_impression",
           [](ExposureLedger& ledger, const std::vector<double>& attention,
              const std::vector<double>& relevance, double utility) {
             ledger.add_impression(attention, relevance, utility);
           },
           py::arg("attention_by_item"), py::arg("relevance_by_item"),
           py::arg("normalized_utility"))
      .def("attention", &ExposureLedger::attention)
      .def("relevance", &ExposureLedger::relevance)
      .def("impressions", &ExposureLedger::impressions)
      .def("utility_sum", &ExposureLedger::utility_sum)
      .def("mean_utility", &ExposureLedger::mean_utility)
      .def("item_count", &ExposureLedger::item_count);

  m.def("normalized_shares",
        [](const std::vector<double>& values) { return normalized_shares(values); },
        py::arg("values"));
  m.def("unfairness",
        [](const std::vector<double>& attention, const std::vector<double>& relevance) {
          return unfairness(attention, relevance);
        },
        py::arg("attention"), py::arg("relevance"));
  m.def("fairness",
        [](const std::vector<double>& attention, const std::vector<double>& relevance) {
          return fairness(attention, relevance);
        },
        py::arg("attention"), py::arg("relevance"));
  m.def("objective", &objective, py::arg("lambda_"), py::arg("ledger"));

  // policies
  py::class_<PolicyConfig> policy(m, "PolicyConfig");
  py::enum_<PolicyConfig::Kind>(policy, "Kind")
      .value("Greedy", PolicyConfig::Kind::Greedy)
      .value("PlackettLuce", PolicyConfig::Kind::PlackettLuce)
      .value("StaticRelevance", PolicyConfig::Kind::StaticRelevance);
  policy.def_readwrite("kind", &PolicyConfig::kind)
      .def_readwrite("lambda_", &PolicyConfig::lambda)
      .def_static("greedy", &PolicyConfig::greedy, py::arg("lambda_"))
      .def_static("plackett_luce", &PolicyConfig::plackett_luce)
      .def_static("static_relevance", &PolicyConfig::static_relevance)
      .def("name", [](const PolicyConfig& p) { return std::string(p.name()); })
      .def("__eq__", [](const PolicyConfig& a, const PolicyConfig& b) { return a == b; });

  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("seed", &RandomSource::seed)
      .def("next_unit", &RandomSource::next_unit);

  m.attr("MAX_ENUMERATION_ITEMS") = kMaxEnumerationItems;
  m.def("static_relevance", &static_relevance, py::arg("catalog"));
  m.def("pl_sample", &pl_sample, py::arg("catalog"), py::arg("rng"));
  m.def("greedy_next", &greedy_next, py::arg("ledger"), py::arg("catalog"),
        py::arg("lambda_"), py::arg("params") = CascadeParams{}, py::arg("horizon") = 0);
  m.def("enumerate_permutations", &enumerate_permutations, py::arg("n"));

  // simulation
  py::class_<RunResult>(m, "RunResult")
      .def_readonly("catalog", &RunResult::catalog)
      .def_readonly("policy", &RunResult::policy)
      .def_readonly("params", &RunResult::params)
      .def_readonly("impressions", &RunResult::impressions)
      .def_readonly("seed", &RunResult::seed)
      .def_readonly("attention", &RunResult::attention)
      .def_readonly("relevance", &RunResult::relevance)
      .def_readonly("per_impression_utilities", &RunResult::per_impression_utilities)
      .def_readonly("mean_utility", &RunResult::mean_utility)
      .def_readonly("final_unfairness", &RunResult::final_unfairness);

  py::class_<EnsembleSummary>(m, "EnsembleSummary")
      .def_readonly("utility_p5", &EnsembleSummary::utility_p5)
      .def_readonly("utility_median", &EnsembleSummary::utility_median)
      .def_readonly("utility_p95", &EnsembleSummary::utility_p95)
      .def_readonly("unfairness_p5", &EnsembleSummary::unfairness_p5)
      .def_readonly("unfairness_median", &EnsembleSummary::unfairness_median)
      .def_readonly("unfairness_p95", &EnsembleSummary::unfairness_p95)
      .def_readonly("repetitions", &EnsembleSummary::repetitions);

  py::class_<DuplicationGain>(m, "DuplicationGain")
      .def_readonly("pair_sum", &DuplicationGain::pair_sum)
      .def_readonly("baseline", &DuplicationGain::baseline)
      .def_readonly("gain", &DuplicationGain::gain);

  m.def("run",
        [](const PolicyConfig& policy, const ItemCatalog& catalog, int impressions,
           const CascadeParams& params, RandomSource* rng) {
          return run(policy, catalog, impressions, params, rng);
        },
        py::arg("policy"), py::arg("catalog"), py::arg("impressions"),
        py::arg("params") = CascadeParams{}, py::arg("rng") = nullptr);
  m.def("pl_ensemble", &pl_ensemble, py::arg("catalog"), py::arg("impressions"),
        py::arg("repetitions"), py::arg("base_seed"), py::arg("params") = CascadeParams{});
  m.def("nearest_rank_percentile", &nearest_rank_percentile, py::arg("values"),
        py::arg("pct"));
  m.def("duplication_gain", &duplication_gain, py::arg("dup_result"),
        py::arg("base_result"), py::arg("target"));

  // experiments
  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("deltas", &ExperimentConfig::deltas)
      .def_readwrite("impressions", &ExperimentConfig::impressions)
      .def_readwrite("lambda_grid", &ExperimentConfig::lambda_grid)
      .def_readwrite("costs", &ExperimentConfig::costs)
      .def_readwrite("pl_repetitions", &ExperimentConfig::pl_repetitions)
      .def_readwrite("base_seed", &ExperimentConfig::base_seed)
      .def_readwrite("cascade", &ExperimentConfig::cascade)
      .def_readwrite("item_count", &ExperimentConfig::item_count)
      .def_readwrite("out_path", &ExperimentConfig::out_path)
      .def("validate", &ExperimentConfig::validate);

  py::enum_<CsvSchema>(m, "CsvSchema")
      .value("Tradeoff", CsvSchema::Tradeoff)
      .value("Duplication", CsvSchema::Duplication);

  py::class_<ResultRow>(m, "ResultRow")
      .def(py::init<>())
      .def_readwrite("experiment", &ResultRow::experiment)
      .def_readwrite("delta", &ResultRow::delta)
      .def_readwrite("impressions", &ResultRow::impressions)
      .def_readwrite("policy", &ResultRow::policy)
      .def_readwrite("lambda_", &ResultRow::lambda)
      .def_readwrite("cost_k", &ResultRow::cost_k)
      .def_readwrite("duplicated_item", &ResultRow::duplicated_item)
      .def_readwrite("item", &ResultRow::item)
      .def_readwrite("metric", &ResultRow::metric)
      .def_readwrite("value", &ResultRow::value)
      .def_readwrite("seed", &ResultRow::seed);

  py::class_<ResultTable>(m, "ResultTable")
      .def_readonly("schema", &ResultTable::schema)
      .def_readonly("rows", &ResultTable::rows);

  m.def("tradeoff_experiment", &tradeoff_experiment, py::arg("config"));
  m.def("default_duplication_policies", &default_duplication_policies);
  m.def("duplication_experiment", &duplication_experiment, py::arg("config"),
        py::arg("policies") = default_duplication_policies());
  m.def("csv_header", &csv_header, py::arg("schema"));
  m.def("to_csv_line", &to_csv_line, py::arg("row"), py::arg("schema"));
  m.def("parse_csv_line", &parse_csv_line, py::arg("line"), py::arg("schema"));
  m.def("emit_csv", &emit_csv, py::arg("table"), py::arg("path"));
  m.def("parse_config", py::overload_cast<const std::string&>(&parse_config),
        py::arg("path"));
}
