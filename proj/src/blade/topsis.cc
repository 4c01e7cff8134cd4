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

#include "harmonica/blade/topsis.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "harmonica/error.h"

namespace harmonica::blade {

namespace {

void CheckShape(const DecisionMatrix& matrix, const WeightVector& weights) {
  if (matrix.alternatives.empty() || matrix.criteria.empty()) {
    throw Error(ErrorCode::kEmptyMatrix,
                "decision matrix needs at least one alternative and criterion");
  }
  if (matrix.values.size() != matrix.alternatives.size()) {
    throw Error(ErrorCode::kEmptyMatrix, "decision matrix row count mismatch");
  }
  for (const auto& row : matrix.values) {
    if (row.size() != matrix.criteria.size()) {
      throw Error(ErrorCode::kEmptyMatrix, "decision matrix is not rectangular");
    }
  }
  std::set<std::string> criteria;
  for (const auto& c : matrix.criteria) criteria.insert(c.attribute_id);
  bool match = criteria.size() == matrix.criteria.size() &&
               weights.weights.size() == criteria.size();
  for (const auto& [id, w] : weights.weights) match &= criteria.count(id) == 1;
  if (!match) {
    throw Error(ErrorCode::kWeightMismatch,
                "weights must cover exactly the matrix criteria");
  }
}

}  // namespace

long long ClosenessSortKey(double closeness) {
  return std::llround(closeness / kClosenessTieResolution);
}

Ranking TopsisRank(const DecisionMatrix& matrix, const WeightVector& weights) {
  CheckShape(matrix, weights);
  const size_t rows = matrix.alternatives.size();
  const size_t cols = matrix.criteria.size();

  // Weighted, vector-normalized matrix.
  std::vector<std::vector<double>> weighted(rows, std::vector<double>(cols));
  for (size_t j = 0; j < cols; ++j) {
    double sum_sq = 0.0;
    for (size_t i = 0; i < rows; ++i) sum_sq += matrix.values[i][j] * matrix.values[i][j];
    const double norm = std::sqrt(sum_sq);
    const double w = weights.weights.at(matrix.criteria[j].attribute_id);
    for (size_t i = 0; i < rows; ++i) {
      weighted[i][j] = norm == 0.0 ? 0.0 : w * (matrix.values[i][j] / norm);
    }
  }

  std::vector<double> ideal(cols), anti_ideal(cols);
  for (size_t j = 0; j < cols; ++j) {
    double lo = weighted[0][j], hi = weighted[0][j];
    for (size_t i = 1; i < rows; ++i) {
      lo = std::min(lo, weighted[i][j]);
      hi = std::max(hi, weighted[i][j]);
    }
    const bool benefit = matrix.criteria[j].direction == kb::Direction::kBenefit;
    ideal[j] = benefit ? hi : lo;
    anti_ideal[j] = benefit ? lo : hi;
  }

  Ranking ranking;
  ranking.entries.reserve(rows);
  for (size_t i = 0; i < rows; ++i) {
    RankedAlternative entry;
    entry.blockchain_id = matrix.alternatives[i];
    double plus_sq = 0.0, minus_sq = 0.0;
    for (size_t j = 0; j < cols; ++j) {
      CriterionContribution c;
      c.attribute_id = matrix.criteria[j].attribute_id;
      c.weighted = weighted[i][j];
      c.gap_to_ideal = weighted[i][j] - ideal[j];
      c.gap_to_anti_ideal = weighted[i][j] - anti_ideal[j];
      plus_sq += c.gap_to_ideal * c.gap_to_ideal;
      minus_sq += c.gap_to_anti_ideal * c.gap_to_anti_ideal;
      entry.contributions.push_back(std::move(c));
    }
    entry.d_plus = std::sqrt(plus_sq);
    entry.d_minus = std::sqrt(minus_sq);
    const double total = entry.d_plus + entry.d_minus;
    entry.closeness = total == 0.0 ? 0.5 : entry.d_minus / total;
    ranking.entries.push_back(std::move(entry));
  }

  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const RankedAlternative& a, const RankedAlternative& b) {
              long long ka = ClosenessSortKey(a.closeness);
              long long kb = ClosenessSortKey(b.closeness);
              if (ka != kb) return ka > kb;
              return a.blockchain_id < b.blockchain_id;
            });
  return ranking;
}

const std::vector<CriterionContribution>& Explain(
    const Ranking& ranking, std::string_view blockchain_id) {
  for (const auto& entry : ranking.entries) {
    if (entry.blockchain_id == blockchain_id) return entry.contributions;
  }
  throw Error(ErrorCode::kNotRanked,
              "blockchain '" + std::string(blockchain_id) + "' is not ranked",
              {{"id", blockchain_id}});
}

nlohmann::json ExplainToJson(const std::vector<CriterionContribution>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : rows) {
    out.push_back({{"attribute", c.attribute_id},
                   {"weighted", c.weighted},
                   {"gap_to_ideal", c.gap_to_ideal},
                   {"gap_to_anti_ideal", c.gap_to_anti_ideal}});
  }
  return out;
}

nlohmann::json ToJson(const Ranking& ranking) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : ranking.entries) {
    entries.push_back({{"blockchain_id", e.blockchain_id},
                       {"closeness", e.closeness},
                       {"d_plus", e.d_plus},
                       {"d_minus", e.d_minus},
                       {"contributions", ExplainToJson(e.contributions)}});
  }
  nlohmann::json disqualified = nlohmann::json::array();
  for (const auto& d : ranking.disqualified) {
    disqualified.push_back({{"blockchain_id", d.blockchain_id},
                            {"attribute_id", d.attribute_id},
                            {"actual_score", d.actual_score},
                            {"min_level", d.min_level}});
  }
  return {{"entries", entries}, {"disqualified", disqualified}};
}

nlohmann::json ToJson(const WeightVector& weights) {
  return nlohmann::json(weights.weights);
}

Ranking RankingFromJson(const nlohmann::json& j) {
  try {
    Ranking ranking;
    for (const auto& e : j.at("entries")) {
      RankedAlternative entry;
      entry.blockchain_id = e.at("blockchain_id").get<std::string>();
      entry.closeness = e.at("closeness").get<double>();
      entry.d_plus = e.at("d_plus").get<double>();
      entry.d_minus = e.at("d_minus").get<double>();
      for (const auto& c : e.at("contributions")) {
        entry.contributions.push_back(
            {c.at("attribute").get<std::string>(), c.at("weighted").get<double>(),
             c.at("gap_to_ideal").get<double>(),
             c.at("gap_to_anti_ideal").get<double>()});
      }
      ranking.entries.push_back(std::move(entry));
    }
    for (const auto& d : j.at("disqualified")) {
      ranking.disqualified.push_back(
          {d.at("blockchain_id").get<std::string>(),
           d.at("attribute_id").get<std::string>(), d.at("actual_score").get<int>(),
           d.at("min_level").get<int>()});
    }
    return ranking;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadRequest, std::string("malformed ranking: ") + e.what());
  }
}

}  // namespace harmonica::blade
