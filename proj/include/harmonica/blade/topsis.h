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

#ifndef HARMONICA_BLADE_TOPSIS_H_
#define HARMONICA_BLADE_TOPSIS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "harmonica/kb/knowledge_base.h"
#include "json.hpp"

namespace harmonica::blade {

struct Criterion {
  std::string attribute_id;
  kb::Direction direction = kb::Direction::kBenefit;
};

// Row i is alternative i, column j is criterion j.
struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<Criterion> criteria;
  std::vector<std::vector<double>> values;
};

struct WeightVector {
  std::map<std::string, double> weights;  // attribute id -> weight in (0, 1]
};

struct CriterionContribution {
  std::string attribute_id;
  double weighted = 0.0;           // v_ij
  double gap_to_ideal = 0.0;       // v_ij - ideal_j
  double gap_to_anti_ideal = 0.0;  // v_ij - anti_ideal_j
};

struct RankedAlternative {
  std::string blockchain_id;
  double closeness = 0.0;
  double d_plus = 0.0;
  double d_minus = 0.0;
  std::vector<CriterionContribution> contributions;  // matrix criteria order
};

struct Disqualification {
  std::string blockchain_id;
  std::string attribute_id;
  int actual_score = 0;
  int min_level = 0;
};

struct Ranking {
  std::vector<RankedAlternative> entries;
  std::vector<Disqualification> disqualified;
};

// Closeness values closer than this are ordered by id instead.
inline constexpr double kClosenessTieResolution = 1e-12;

// Quantized sort key shared by every ranking path so that float noise below
// kClosenessTieResolution never reorders ties.
long long ClosenessSortKey(double closeness);

// Classical TOPSIS: vector normalization, weighting, ideal/anti-ideal per
// criterion direction, Euclidean distances, relative closeness. All-zero
// columns normalize to zero and d+ + d- == 0 yields closeness 0.5. Entries
// are sorted by closeness descending, then id ascending.
//
// Throws Error(kEmptyMatrix) without alternatives or criteria and
// Error(kWeightMismatch) unless weights cover exactly the criteria.
Ranking TopsisRank(const DecisionMatrix& matrix, const WeightVector& weights);

// Per-criterion breakdown for one ranked alternative. Throws Error(kNotRanked).
const std::vector<CriterionContribution>& Explain(const Ranking& ranking,
                                                  std::string_view blockchain_id);

nlohmann::json ToJson(const Ranking& ranking);
nlohmann::json ToJson(const WeightVector& weights);
nlohmann::json ExplainToJson(const std::vector<CriterionContribution>& rows);
Ranking RankingFromJson(const nlohmann::json& j);

}  // namespace harmonica::blade

#endif  // HARMONICA_BLADE_TOPSIS_H_
