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

#ifndef HARMONICA_BLADE_RECOMMEND_H_
#define HARMONICA_BLADE_RECOMMEND_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "harmonica/blade/conflicts.h"
#include "harmonica/blade/profile.h"
#include "harmonica/blade/topsis.h"
#include "harmonica/kb/knowledge_base.h"
#include "json.hpp"

namespace harmonica::blade {

// Raw weight is the effective level (0-4, Required forces 4); attributes with
// raw weight 0 are dropped and the rest normalized to sum to one.
// Throws Error(kNoActiveCriteria).
WeightVector DeriveWeights(const PreferenceProfile& profile,
                           const kb::KnowledgeBase& kb);

struct FilterResult {
  std::vector<std::string> qualified;  // knowledge-base order
  std::vector<Disqualification> disqualified;
};

// A blockchain is disqualified by its first failing required attribute in
// catalog order.
FilterResult FilterRequired(const PreferenceProfile& profile,
                            const kb::KnowledgeBase& kb);

// Qualified alternatives x active criteria, both in knowledge-base order.
DecisionMatrix BuildDecisionMatrix(const std::vector<std::string>& alternatives,
                                   const WeightVector& weights,
                                   const kb::KnowledgeBase& kb);

struct PatternRecommendation {
  std::string pattern_id;
  std::optional<double> score;  // absent iff excluded
  std::set<std::string> matched_attributes;
  std::optional<std::string> excluded_reason;
  // Other scored patterns this one conflicts with.
  std::set<std::string> conflicts_with;
};

// Capability filter, then score = sum of effective preference levels over the
// profile-active attributes the pattern addresses. Scored patterns come first
// (score descending, id ascending), then excluded ones by id.
std::vector<PatternRecommendation> RecommendPatterns(
    const PreferenceProfile& profile, const kb::BlockchainDescriptor& blockchain,
    const kb::KnowledgeBase& kb);

struct RecommendationReport {
  ConflictReport conflicts;
  std::optional<Ranking> ranking;  // absent when an error conflict exists
  std::optional<WeightVector> weights;
  std::vector<PatternRecommendation> patterns;

  const std::string* TopBlockchain() const;
};

// check_conflicts -> (gate on errors) -> derive_weights -> filter_required
// -> TOPSIS -> patterns for the top-ranked blockchain.
// Throws Error(kNoActiveCriteria), Error(kAllDisqualified),
// Error(kUnknownAttribute).
RecommendationReport Recommend(const PreferenceProfile& profile,
                               const kb::KnowledgeBase& kb);

nlohmann::json ToJson(const PatternRecommendation& recommendation);
nlohmann::json ToJson(const RecommendationReport& report);

// Reads the parts of a serialized report that downstream tools consume
// (ranking and patterns). Throws Error(kBadRequest).
RecommendationReport ReportFromJson(const nlohmann::json& j);

}  // namespace harmonica::blade

#endif  // HARMONICA_BLADE_RECOMMEND_H_
