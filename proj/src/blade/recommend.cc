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

#include "harmonica/blade/recommend.h"

#include <algorithm>

#include "harmonica/error.h"

namespace harmonica::blade {

WeightVector DeriveWeights(const PreferenceProfile& profile,
                           const kb::KnowledgeBase& kb) {
  ValidateProfile(profile, kb);
  int total = 0;
  for (const auto& [id, req] : profile.requirements) total += req.RawWeight();
  if (total == 0) {
    throw Error(ErrorCode::kNoActiveCriteria,
                "profile has no attribute above Indifferent and none required");
  }
  WeightVector weights;
  for (const auto& [id, req] : profile.requirements) {
    if (req.RawWeight() > 0) {
      weights.weights[id] = static_cast<double>(req.RawWeight()) / total;
    }
  }
  return weights;
}

FilterResult FilterRequired(const PreferenceProfile& profile,
                            const kb::KnowledgeBase& kb) {
  ValidateProfile(profile, kb);
  FilterResult result;
  for (const auto& chain : kb.blockchains) {
    bool qualified = true;
    for (const auto& attr : kb.attributes) {
      auto it = profile.requirements.find(attr.id);
      if (it == profile.requirements.end() || !it->second.required) continue;
      int score = chain.scores.at(attr.id);
      if (score < *it->second.min_level) {
        result.disqualified.push_back(
            {chain.id, attr.id, score, *it->second.min_level});
        qualified = false;
        break;
      }
    }
    if (qualified) result.qualified.push_back(chain.id);
  }
  return result;
}

DecisionMatrix BuildDecisionMatrix(const std::vector<std::string>& alternatives,
                                   const WeightVector& weights,
                                   const kb::KnowledgeBase& kb) {
  DecisionMatrix matrix;
  matrix.alternatives = alternatives;
  for (const auto& attr : kb.attributes) {
    if (weights.weights.count(attr.id) != 0) {
      matrix.criteria.push_back({attr.id, attr.direction});
    }
  }
  for (const auto& id : alternatives) {
    const auto& chain = kb.blockchain(id);
    std::vector<double> row;
    row.reserve(matrix.criteria.size());
    for (const auto& c : matrix.criteria) row.push_back(chain.scores.at(c.attribute_id));
    matrix.values.push_back(std::move(row));
  }
  return matrix;
}

std::vector<PatternRecommendation> RecommendPatterns(
    const PreferenceProfile& profile, const kb::BlockchainDescriptor& blockchain,
    const kb::KnowledgeBase& kb) {
  std::vector<PatternRecommendation> scored, excluded;
  for (const auto& pattern : kb.patterns) {
    PatternRecommendation rec;
    rec.pattern_id = pattern.id;
    std::vector<std::string> missing;
    for (const auto& cap : pattern.requires_capabilities) {
      if (!blockchain.HasCapability(cap)) missing.push_back(cap);
    }
    if (!missing.empty()) {
      std::string reason = "missing capability: ";
      for (size_t i = 0; i < missing.size(); ++i) {
        if (i > 0) reason += ", ";
        reason += missing[i];
      }
      rec.excluded_reason = reason;
      excluded.push_back(std::move(rec));
      continue;
    }
    double score = 0.0;
    for (const auto& attr : pattern.addresses) {
      if (profile.IsActive(attr)) {
        rec.matched_attributes.insert(attr);
        score += profile.Get(attr).RawWeight();
      }
    }
    rec.score = score;
    scored.push_back(std::move(rec));
  }

  std::sort(scored.begin(), scored.end(),
            [](const PatternRecommendation& a, const PatternRecommendation& b) {
              if (*a.score != *b.score) return *a.score > *b.score;
              return a.pattern_id < b.pattern_id;
            });
  std::sort(excluded.begin(), excluded.end(),
            [](const PatternRecommendation& a, const PatternRecommendation& b) {
              return a.pattern_id < b.pattern_id;
            });

  std::set<std::string> listed;
  for (const auto& rec : scored) listed.insert(rec.pattern_id);
  for (auto& rec : scored) {
    for (const auto& other : kb.pattern(rec.pattern_id).conflicts_with) {
      if (listed.count(other) != 0) rec.conflicts_with.insert(other);
    }
  }
  scored.insert(scored.end(), std::make_move_iterator(excluded.begin()),
                std::make_move_iterator(excluded.end()));
  return scored;
}

const std::string* RecommendationReport::TopBlockchain() const {
  if (!ranking || ranking->entries.empty()) return nullptr;
  return &ranking->entries.front().blockchain_id;
}

RecommendationReport Recommend(const PreferenceProfile& profile,
                               const kb::KnowledgeBase& kb) {
  RecommendationReport report;
  report.conflicts = CheckConflicts(profile, kb);
  ValidateProfile(profile, kb);
  if (report.conflicts.HasErrors()) return report;

  WeightVector weights = DeriveWeights(profile, kb);
  FilterResult filtered = FilterRequired(profile, kb);
  if (filtered.qualified.empty()) {
    nlohmann::json details = nlohmann::json::array();
    for (const auto& d : filtered.disqualified) {
      details.push_back({{"blockchain_id", d.blockchain_id},
                         {"attribute_id", d.attribute_id},
                         {"actual_score", d.actual_score},
                         {"min_level", d.min_level}});
    }
    throw Error(ErrorCode::kAllDisqualified,
                "every blockchain fails at least one required attribute",
                {{"disqualified", details}});
  }

  Ranking ranking =
      TopsisRank(BuildDecisionMatrix(filtered.qualified, weights, kb), weights);
  ranking.disqualified = std::move(filtered.disqualified);
  report.patterns = RecommendPatterns(
      profile, kb.blockchain(ranking.entries.front().blockchain_id), kb);
  report.ranking = std::move(ranking);
  report.weights = std::move(weights);
  return report;
}

nlohmann::json ToJson(const PatternRecommendation& rec) {
  nlohmann::json j = {{"pattern_id", rec.pattern_id},
                      {"matched_attributes", rec.matched_attributes},
                      {"conflicts_with", rec.conflicts_with}};
  j["score"] = rec.score ? nlohmann::json(*rec.score) : nlohmann::json(nullptr);
  j["excluded_reason"] = rec.excluded_reason ? nlohmann::json(*rec.excluded_reason)
                                             : nlohmann::json(nullptr);
  return j;
}

nlohmann::json ToJson(const RecommendationReport& report) {
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& p : report.patterns) patterns.push_back(ToJson(p));
  const std::string* top = report.TopBlockchain();
  return {{"conflicts", ToJson(report.conflicts)},
          {"ranking", report.ranking ? ToJson(*report.ranking) : nlohmann::json(nullptr)},
          {"weights", report.weights ? ToJson(*report.weights) : nlohmann::json(nullptr)},
          {"patterns", patterns},
          {"recommended_blockchain",
           top != nullptr ? nlohmann::json(*top) : nlohmann::json(nullptr)}};
}

RecommendationReport ReportFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kBadRequest, "report must be an object");
  RecommendationReport report;
  try {
    if (j.contains("ranking") && !j.at("ranking").is_null()) {
      report.ranking = RankingFromJson(j.at("ranking"));
    }
    if (j.contains("weights") && !j.at("weights").is_null()) {
      report.weights = WeightVector{j.at("weights").get<std::map<std::string, double>>()};
    }
    if (j.contains("patterns")) {
      for (const auto& p : j.at("patterns")) {
        PatternRecommendation rec;
        rec.pattern_id = p.at("pattern_id").get<std::string>();
        if (!p.at("score").is_null()) rec.score = p.at("score").get<double>();
        if (!p.at("excluded_reason").is_null()) {
          rec.excluded_reason = p.at("excluded_reason").get<std::string>();
        }
        rec.matched_attributes = p.at("matched_attributes").get<std::set<std::string>>();
        rec.conflicts_with = p.at("conflicts_with").get<std::set<std::string>>();
        report.patterns.push_back(std::move(rec));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadRequest, std::string("malformed report: ") + e.what());
  }
  return report;
}

}  // namespace harmonica::blade
