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

#include "fairsim/scenario.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace fairsim {

ItemCatalog::ItemCatalog(std::vector<CatalogItem> items) : items_(std::move(items)) {
  std::unordered_set<ItemId> seen;
  int duplicates = 0;
  for (const auto& it : items_) {
    if (it.id < 0) {
      throw std::invalid_argument("catalog item ids must be nonnegative");
    }
    if (!seen.insert(it.id).second) {
      throw std::invalid_argument("catalog item ids must be unique (id " +
                                  std::to_string(it.id) + " repeats)");
    }
    if (!(it.relevance >= 0.0 && it.relevance <= 1.0)) {
      throw std::invalid_argument("item relevance must be in [0, 1] (id " +
                                  std::to_string(it.id) + ")");
    }
    if (it.is_duplicate()) {
      ++duplicates;
    }
  }
  if (duplicates > 1) {
    throw std::invalid_argument("a catalog holds at most one duplicate");
  }
  for (const auto& it : items_) {
    if (!it.is_duplicate()) continue;
    const ItemId original = *it.duplicate_of;
    const auto ref = std::find_if(items_.begin(), items_.end(),
                                  [&](const CatalogItem& o) { return o.id == original; });
    if (ref == items_.end()) {
      throw std::invalid_argument("duplicate_of refers to an id not in the catalog");
    }
    if (ref->is_duplicate()) {
      throw std::invalid_argument("duplicate_of must refer to an original item");
    }
  }
}

const CatalogItem& ItemCatalog::item(ItemId id) const {
  return items_[index_of(id)];
}

std::size_t ItemCatalog::index_of(ItemId id) const {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].id == id) return i;
  }
  throw std::invalid_argument("unknown item id " + std::to_string(id));
}

bool ItemCatalog::has_duplicate() const {
  return duplicate_id().has_value();
}

std::optional<ItemId> ItemCatalog::duplicate_id() const {
  for (const auto& it : items_) {
    if (it.is_duplicate()) return it.id;
  }
  return std::nullopt;
}

std::vector<ItemId> ItemCatalog::ids() const {
  std::vector<ItemId> out;
  out.reserve(items_.size());
  for (const auto& it : items_) out.push_back(it.id);
  return out;
}

std::vector<double> ItemCatalog::relevances() const {
  std::vector<double> out;
  out.reserve(items_.size());
  for (const auto& it : items_) out.push_back(it.relevance);
  return out;
}

std::vector<double> ItemCatalog::relevances_in(const Ranking& ranking) const {
  if (ranking.order.size() != items_.size()) {
    throw std::invalid_argument("ranking is not a permutation of the catalog");
  }
  std::unordered_set<ItemId> seen;
  std::vector<double> out;
  out.reserve(items_.size());
  for (ItemId id : ranking.order) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument("ranking repeats item id " + std::to_string(id));
    }
    out.push_back(item(id).relevance);
  }
  return out;
}

ItemCatalog build_catalog(const RelevanceProfile& profile) {
  if (profile.item_count < 1) {
    throw std::invalid_argument("item_count must be positive");
  }
  if (!(profile.delta > 0.0 && profile.delta <= 0.25)) {
    throw std::invalid_argument("delta must be in (0, 0.25]");
  }
  const double lowest = 1.0 - (profile.item_count - 1) * profile.delta;
  if (lowest < 0.0) {
    throw std::invalid_argument("delta makes the least relevant item negative");
  }
  std::vector<CatalogItem> items;
  items.reserve(profile.item_count);
  for (int i = 0; i < profile.item_count; ++i) {
    items.push_back({i, 1.0 - i * profile.delta, std::nullopt});
  }
  return ItemCatalog(std::move(items));
}

ItemCatalog duplicate(const ItemCatalog& catalog, const DuplicationSpec& spec) {
  if (!spec.target.has_value()) {
    return catalog;
  }
  if (!(spec.cost > 0.0 && spec.cost <= 1.0)) {
    throw std::invalid_argument("duplication cost must be in (0, 1]");
  }
  if (catalog.has_duplicate()) {
    throw std::invalid_argument("catalog already holds a duplicate");
  }
  const CatalogItem& original = catalog.item(*spec.target);
  if (original.is_duplicate()) {
    throw std::invalid_argument("cannot duplicate a duplicate");
  }
  std::vector<CatalogItem> items = catalog.items();
  ItemId next_id = 0;
  for (const auto& it : items) next_id = std::max(next_id, it.id + 1);
  items.push_back({next_id, spec.cost * original.relevance, original.id});
  return ItemCatalog(std::move(items));
}

std::vector<ScenarioDescriptor> settings_grid(const std::vector<double>& deltas,
                                              const std::vector<double>& costs,
                                              const std::vector<int>& impressions,
                                              const std::vector<double>& lambdas,
                                              int item_count) {
  if (deltas.empty() || costs.empty() || impressions.empty()) {
    throw std::invalid_argument("settings_grid requires non-empty deltas, costs and impressions");
  }
  if (item_count < 1) {
    throw std::invalid_argument("item_count must be positive");
  }
  for (double l : lambdas) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw std::invalid_argument("lambda must be in [0, 1]");
    }
  }
  for (int j : impressions) {
    if (j < 1) throw std::invalid_argument("impressions must be positive");
  }
  for (double k : costs) {
    if (!(k > 0.0 && k <= 1.0)) {
      throw std::invalid_argument("duplication cost must be in (0, 1]");
    }
  }

  std::vector<std::optional<double>> lambda_axis;
  if (lambdas.empty()) {
    lambda_axis.push_back(std::nullopt);
  } else {
    for (double l : lambdas) lambda_axis.emplace_back(l);
  }

  std::vector<ScenarioDescriptor> grid;
  for (double d : deltas) {
    for (double k : costs) {
      for (int j : impressions) {
        for (const auto& l : lambda_axis) {
          for (int target = -1; target < item_count; ++target) {
            ScenarioDescriptor s;
            s.delta = d;
            s.cost_k = k;
            s.impressions = j;
            s.lambda = l;
            s.item_count = item_count;
            if (target >= 0) s.duplicated_item = target;
            grid.push_back(std::move(s));
          }
        }
      }
    }
  }
  return grid;
}

}  // namespace fairsim
