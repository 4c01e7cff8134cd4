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

#ifndef HARMONICA_BANCO_CONFIGURATION_H_
#define HARMONICA_BANCO_CONFIGURATION_H_

#include <set>
#include <string>
#include <vector>

#include "harmonica/banco/feature_model.h"
#include "harmonica/blade/recommend.h"
#include "json.hpp"

namespace harmonica::banco {

struct Configuration {
  std::set<std::string> selected;
  std::set<std::string> deselected;

  // Features that are neither selected nor deselected.
  std::set<std::string> Open(const FeatureModel& model) const;

  bool operator==(const Configuration&) const = default;
  bool operator<(const Configuration& other) const {
    return std::tie(selected, deselected) < std::tie(other.selected, other.deselected);
  }
};

enum class Validity { kValid, kInvalid, kIncomplete };

struct Violation {
  std::string rule;  // root, mandatory, parent, xor-group, or-group, requires, excludes, disjoint
  std::vector<std::string> features;
  std::string message;
};

struct ValidityReport {
  Validity status = Validity::kIncomplete;
  std::vector<Violation> violations;
};

// Evaluates every tree rule and cross-tree constraint in three-valued logic
// (open features are unknown). Any rule that is definitely false is a
// violation; with no violation the status is valid iff nothing is open.
// Throws Error(kUnknownFeature).
ValidityReport ValidateConfiguration(const Configuration& config,
                                     const FeatureModel& model);

// Fixpoint propagation of forced decisions only; never makes a free choice.
// Throws Error(kContradiction) with the conflicting features in details.
Configuration CompleteConfiguration(const Configuration& partial,
                                    const FeatureModel& model);

inline constexpr size_t kMaxEnumerableFeatures = 25;

// Every complete valid configuration, sorted. Throws Error(kExceededLimit)
// when there are more than `limit`, or the model exceeds
// kMaxEnumerableFeatures.
std::vector<Configuration> EnumerateConfigurations(const FeatureModel& model,
                                                   size_t limit);

// Selects the top-ranked blockchain's feature and the feature of every
// pattern scored above zero. Throws Error(kMissingRanking) and
// Error(kUnmappedBlockchain).
Configuration PreselectFromRecommendation(const blade::RecommendationReport& report,
                                          const FeatureModel& model);

nlohmann::json ToJson(const Configuration& config);
nlohmann::json ToJson(const Configuration& config, const FeatureModel& model);
nlohmann::json ToJson(const ValidityReport& report);
// {"selected": [...], "deselected": [...]}; "open" is accepted and ignored.
// Throws Error(kBadRequest).
Configuration ConfigurationFromJson(const nlohmann::json& j);

std::string_view ValidityName(Validity status);

}  // namespace harmonica::banco

#endif  // HARMONICA_BANCO_CONFIGURATION_H_
