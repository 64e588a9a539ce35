// Copyright 2026 The splcit Authors
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

// Feature models, products over them, and the line-oriented .fm format.
//
// A model is a tree of features plus cross-tree constraints. Every feature is
// addressed by its position in declaration order; that position is the
// canonical index used by all downstream modules.

#ifndef SPLCIT_FEATURE_MODEL_H_
#define SPLCIT_FEATURE_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace splcit {

enum class Relation { kRoot, kMandatory, kOptional, kXorMember, kOrMember };
enum class GroupKind { kXor, kOr };
enum class ConstraintKind { kRequires, kExcludes };

struct Feature {
  std::string name;
  int parent = -1;
  Relation relation = Relation::kRoot;
  // Index into FeatureModel::groups() for group members, -1 otherwise.
  int group = -1;
};

struct FeatureGroup {
  int parent = -1;
  GroupKind kind = GroupKind::kXor;
  std::vector<int> members;
};

struct CrossTreeConstraint {
  ConstraintKind kind = ConstraintKind::kRequires;
  int source = -1;
  int target = -1;
};

// Immutable after construction.
class FeatureModel {
 public:
  // Checks every structural invariant (single root at index 0, tree-shaped
  // parent edges, groups of >= 2 members sharing the group parent, distinct
  // and existing constraint endpoints, unique names). Throws splcit::Error
  // with kInvalidArgument on violation.
  static FeatureModel Create(
      std::string name, std::vector<Feature> features,
      std::vector<FeatureGroup> groups,
      std::vector<CrossTreeConstraint> constraints,
      std::vector<std::pair<std::string, int>> aliases = {});

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(features_.size()); }
  const std::vector<Feature>& features() const { return features_; }
  const Feature& feature(int index) const { return features_[index]; }
  const std::vector<FeatureGroup>& groups() const { return groups_; }
  const std::vector<CrossTreeConstraint>& constraints() const {
    return constraints_;
  }
  // Alternative spellings of feature names, e.g. "Number" for "Num".
  const std::vector<std::pair<std::string, int>>& aliases() const {
    return aliases_;
  }

  // Feature names in canonical order.
  std::vector<std::string> FeatureList() const;

  // Resolves a feature name or alias to its canonical index.
  std::optional<int> IndexOf(std::string_view name) const;

  std::vector<int> Children(int index) const;

 private:
  FeatureModel() = default;

  std::string name_;
  std::vector<Feature> features_;
  std::vector<FeatureGroup> groups_;
  std::vector<CrossTreeConstraint> constraints_;
  std::vector<std::pair<std::string, int>> aliases_;
  std::unordered_map<std::string, int> index_;
};

// A total assignment over a feature list: every feature is either selected
// or not selected.
class FeatureSet {
 public:
  FeatureSet() = default;
  explicit FeatureSet(std::vector<std::uint8_t> selected)
      : selected_(std::move(selected)) {}

  static FeatureSet FromSelected(int feature_count,
                                 std::span<const int> selected);
  // Throws splcit::Error(kInvalidArgument) on unknown names.
  static FeatureSet FromNames(const FeatureModel& model,
                              std::span<const std::string> selected);

  int size() const { return static_cast<int>(selected_.size()); }
  bool selected(int index) const { return selected_[index] != 0; }
  std::span<const std::uint8_t> bits() const { return selected_; }

  std::vector<int> sel() const;
  std::vector<int> notsel() const;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
  friend auto operator<=>(const FeatureSet&, const FeatureSet&) = default;

 private:
  std::vector<std::uint8_t> selected_;
};

// Parses .fm text. Throws splcit::ParseError with the offending location.
FeatureModel ParseModel(std::string_view text);

// Reads and parses a .fm file. Throws splcit::Error(kIo) when unreadable.
FeatureModel LoadModel(const std::string& path);

// Renders a model in .fm syntax; ParseModel(SerializeModel(m)) reproduces m.
std::string SerializeModel(const FeatureModel& model);

// True iff `product` satisfies every hierarchical and cross-tree constraint.
// Throws splcit::Error(kDimensionMismatch) if sizes differ.
bool ValidateFeatureSet(const FeatureModel& model, const FeatureSet& product);

struct FeatureClassification {
  std::vector<int> core;
  std::vector<int> variant;
  std::vector<int> dead;
};

// Splits features by how often they are selected across `all_products`,
// which must be exactly the valid products of the model. Throws
// splcit::Error(kInvalidArgument) on an empty product set (void model).
FeatureClassification ClassifyFeatures(const FeatureModel& model,
                                       std::span<const FeatureSet> all_products);

}  // namespace splcit

#endif  // SPLCIT_FEATURE_MODEL_H_
