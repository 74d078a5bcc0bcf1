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

#ifndef FAIRSIM_SCENARIO_HPP_
#define FAIRSIM_SCENARIO_HPP_

#include <cstddef>
#include <optional>
#include <vector>

namespace fairsim {

using ItemId = int;

/// One ranked item: an original, or a copy of another item in the same
/// catalog (duplicate_of holds the original's id).
struct CatalogItem {
  ItemId id = 0;
  double relevance = 0.0;
  std::optional<ItemId> duplicate_of;

  bool is_duplicate() const { return duplicate_of.has_value(); }
  bool operator==(const CatalogItem&) const = default;
};

/// A permutation of catalog item ids; order[0] is the top position.
struct Ranking {
  std::vector<ItemId> order;

  bool operator==(const Ranking&) const = default;
};

/// The fixed set of items competing for exposure within one query.
/// Immutable once constructed; holds at most one duplicate.
class ItemCatalog {
 public:
  ItemCatalog() = default;

  /// Validates: unique nonnegative ids, relevances in [0, 1], at most one
  /// duplicate, and duplicate_of referencing an original item in the
  /// catalog. Throws std::invalid_argument on violation.
  explicit ItemCatalog(std::vector<CatalogItem> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<CatalogItem>& items() const { return items_; }

  const CatalogItem& item(ItemId id) const;
  std::size_t index_of(ItemId id) const;

  bool has_duplicate() const;
  std::optional<ItemId> duplicate_id() const;

  std::vector<ItemId> ids() const;

  /// Relevance values in catalog order.
  std::vector<double> relevances() const;

  /// Relevance values in rank order. Throws std::invalid_argument unless
  /// `ranking` is a permutation of this catalog.
  std::vector<double> relevances_in(const Ranking& ranking) const;

  bool operator==(const ItemCatalog&) const = default;

 private:
  std::vector<CatalogItem> items_;
};

/// Linearly decreasing relevance profile: item i gets 1 - i * delta.
struct RelevanceProfile {
  double delta = 0.25;
  int item_count = 5;
};

/// Duplication of one catalog item at relevance cost `cost` in (0, 1]:
/// the copy's relevance is cost * original relevance, the original is
/// untouched. An empty target means "no duplication".
struct DuplicationSpec {
  std::optional<ItemId> target;
  double cost = 1.0;
};

ItemCatalog build_catalog(const RelevanceProfile& profile);

/// Returns a new catalog with the copy appended after the originals.
/// The input catalog is never modified. Throws std::invalid_argument when
/// the catalog already holds a duplicate, the target does not exist or is
/// itself a duplicate, or the cost is outside (0, 1].
ItemCatalog duplicate(const ItemCatalog& catalog, const DuplicationSpec& spec);

/// Everything needed to run one simulation cell.
struct ScenarioDescriptor {
  double delta = 0.25;
  double cost_k = 1.0;
  int impressions = 100;
  std::optional<double> lambda;          // absent for lambda-free policies
  std::optional<ItemId> duplicated_item; // absent for the no-duplicate setting
  int item_count = 5;

  bool operator==(const ScenarioDescriptor&) const = default;
};

/// Cartesian product of the parameter lists with the (item_count + 1)
/// duplication settings (each single item duplicated, plus no duplicate).
/// An empty `lambdas` list drops the lambda dimension.
std::vector<ScenarioDescriptor> settings_grid(const std::vector<double>& deltas,
                                              const std::vector<double>& costs,
                                              const std::vector<int>& impressions,
                                              const std::vector<double>& lambdas,
                                              int item_count = 5);

}  // namespace fairsim

#endif  // FAIRSIM_SCENARIO_HPP_
