// Copyright 2026 The Harmonica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HARMONICA_BANCO_FEATURE_MODEL_H_
#define HARMONICA_BANCO_FEATURE_MODEL_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace harmonica::banco {

enum class Variability { kMandatory, kOptional };

// How a feature's children are chosen. kNone defers to each child's own
// variability.
enum class GroupKind { kNone, kXor, kOr };

struct Feature {
  std::string id;
  std::string name;
  std::optional<std::string> parent;
  Variability variability = Variability::kOptional;
  GroupKind group = GroupKind::kNone;
};

enum class ConstraintKind { kRequires, kExcludes };

struct CrossTreeConstraint {
  ConstraintKind kind = ConstraintKind::kRequires;
  std::string from;
  std::string to;
};

class FeatureModel {
 public:
  FeatureModel() = default;

  // Checks the tree invariants and builds the indexes. Throws
  // Error(kMultipleRoots), Error(kCyclicTree) or Error(kStructuralError).
  FeatureModel(std::string version, std::vector<Feature> features,
               std::vector<CrossTreeConstraint> constraints,
               std::map<std::string, std::string> blockchain_feature_map,
               std::map<std::string, std::string> pattern_feature_map);

  const std::string& version() const { return version_; }
  const std::vector<Feature>& features() const { return features_; }
  const std::vector<CrossTreeConstraint>& constraints() const {
    return constraints_;
  }
  const std::map<std::string, std::string>& blockchain_feature_map() const {
    return blockchain_feature_map_;
  }
  const std::map<std::string, std::string>& pattern_feature_map() const {
    return pattern_feature_map_;
  }

  const Feature& root() const { return features_[root_]; }
  const Feature* Find(std::string_view id) const;
  // Index into features(); throws Error(kUnknownFeature).
  size_t IndexOf(std::string_view id) const;
  // Children indexes in document order.
  const std::vector<size_t>& ChildrenOf(size_t index) const {
    return children_[index];
  }
  size_t size() const { return features_.size(); }

 private:
  std::string version_;
  std::vector<Feature> features_;
  std::vector<CrossTreeConstraint> constraints_;
  std::map<std::string, std::string> blockchain_feature_map_;
  std::map<std::string, std::string> pattern_feature_map_;
  std::map<std::string, size_t, std::less<>> index_;
  std::vector<std::vector<size_t>> children_;
  size_t root_ = 0;
};

// Strict feature_model.json reader. Throws Error(kParseError) on schema
// violations plus the structural errors of the FeatureModel constructor.
FeatureModel FeatureModelFromJson(const nlohmann::json& document);
FeatureModel LoadFeatureModel(const std::filesystem::path& path);
nlohmann::json ToJson(const FeatureModel& model);

std::string_view GroupKindName(GroupKind kind);
std::string_view VariabilityName(Variability variability);
std::string_view ConstraintKindName(ConstraintKind kind);

}  // namespace harmonica::banco

#endif  // HARMONICA_BANCO_FEATURE_MODEL_H_
