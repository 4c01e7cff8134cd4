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

#ifndef HARMONICA_BLADE_PROFILE_H_
#define HARMONICA_BLADE_PROFILE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "harmonica/kb/knowledge_base.h"
#include "harmonica/kb/preference_level.h"
#include "json.hpp"

namespace harmonica::blade {

// Minimum score a Required attribute must reach when the profile omits it.
inline constexpr int kDefaultMinLevel = 3;

struct Requirement {
  std::string attribute_id;
  PreferenceLevel level = PreferenceLevel::kIndifferent;
  bool required = false;
  std::optional<int> min_level;  // set iff required

  // A Required attribute counts as Extremely Desirable for weighting and for
  // conflict triggering.
  PreferenceLevel EffectiveLevel() const {
    return required ? PreferenceLevel::kExtremelyDesirable : level;
  }
  int RawWeight() const { return ToInt(EffectiveLevel()); }
  bool IsActive() const { return RawWeight() > 0; }
};

struct PreferenceProfile {
  std::map<std::string, Requirement> requirements;

  // The stored requirement, or an Indifferent one for absent attributes.
  Requirement Get(std::string_view attribute_id) const;
  bool IsActive(std::string_view attribute_id) const;

  PreferenceProfile& Set(std::string attribute_id, PreferenceLevel level);
  PreferenceProfile& Require(std::string attribute_id, int min_level,
                             PreferenceLevel level = PreferenceLevel::kIndifferent);
};

// Throws Error(kUnknownAttribute) for keys missing from the catalog and
// Error(kBadRequest) for a min_level outside the attribute scale.
void ValidateProfile(const PreferenceProfile& profile,
                     const kb::KnowledgeBase& kb);

// Strict document form:
//   {"requirements": {"<id>": {"level": "<label>", "required": bool,
//                              "min_level": int}}}
// "level" defaults to indifferent, "required" to false, and "min_level" to 3
// when required. Throws Error(kBadRequest) on malformed input.
PreferenceProfile ProfileFromJson(const nlohmann::json& document);
nlohmann::json ToJson(const PreferenceProfile& profile);
nlohmann::json ToJson(const Requirement& requirement);

}  // namespace harmonica::blade

#endif  // HARMONICA_BLADE_PROFILE_H_
