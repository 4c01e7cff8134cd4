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

#include "harmonica/blade/profile.h"

#include "harmonica/error.h"

namespace harmonica::blade {

namespace {

[[noreturn]] void BadProfile(const std::string& message) {
  throw Error(ErrorCode::kBadRequest, "invalid profile: " + message);
}

}  // namespace

Requirement PreferenceProfile::Get(std::string_view attribute_id) const {
  auto it = requirements.find(std::string(attribute_id));
  if (it != requirements.end()) return it->second;
  Requirement r;
  r.attribute_id = std::string(attribute_id);
  return r;
}

bool PreferenceProfile::IsActive(std::string_view attribute_id) const {
  auto it = requirements.find(std::string(attribute_id));
  return it != requirements.end() && it->second.IsActive();
}

PreferenceProfile& PreferenceProfile::Set(std::string attribute_id,
                                          PreferenceLevel level) {
  Requirement r;
  r.attribute_id = attribute_id;
  r.level = level;
  requirements[std::move(attribute_id)] = r;
  return *this;
}

PreferenceProfile& PreferenceProfile::Require(std::string attribute_id,
                                              int min_level,
                                              PreferenceLevel level) {
  Requirement r;
  r.attribute_id = attribute_id;
  r.level = level;
  r.required = true;
  r.min_level = min_level;
  requirements[std::move(attribute_id)] = r;
  return *this;
}

void ValidateProfile(const PreferenceProfile& profile,
                     const kb::KnowledgeBase& kb) {
  for (const auto& [id, req] : profile.requirements) {
    const kb::AttributeDefinition* attr = kb.FindAttribute(id);
    if (attr == nullptr) {
      throw Error(ErrorCode::kUnknownAttribute,
                  "unknown attribute '" + id + "' in profile", {{"id", id}});
    }
    if (req.required != req.min_level.has_value()) {
      BadProfile("min_level must be present iff '" + id + "' is required");
    }
    if (req.min_level &&
        (*req.min_level < attr->scale_min || *req.min_level > attr->scale_max)) {
      BadProfile("min_level " + std::to_string(*req.min_level) + " for '" + id +
                 "' is outside the attribute scale");
    }
  }
}

PreferenceProfile ProfileFromJson(const nlohmann::json& document) {
  if (!document.is_object()) BadProfile("document must be an object");
  for (const auto& [key, value] : document.items()) {
    if (key != "requirements") BadProfile("unknown field '" + key + "'");
  }
  auto reqs = document.find("requirements");
  if (reqs == document.end() || !reqs->is_object()) {
    BadProfile("'requirements' must be an object");
  }
  PreferenceProfile profile;
  for (const auto& [id, entry] : reqs->items()) {
    if (!entry.is_object()) BadProfile("requirement '" + id + "' must be an object");
    Requirement r;
    r.attribute_id = id;
    for (const auto& [key, value] : entry.items()) {
      if (key == "level") {
        auto level = value.is_string()
                         ? ParsePreferenceLevel(value.get<std::string>())
                         : std::nullopt;
        if (!level) BadProfile("bad level for '" + id + "'");
        r.level = *level;
      } else if (key == "required") {
        if (!value.is_boolean()) BadProfile("'required' must be a boolean");
        r.required = value.get<bool>();
      } else if (key == "min_level") {
        if (!value.is_number_integer()) BadProfile("'min_level' must be an integer");
        r.min_level = value.get<int>();
      } else {
        BadProfile("unknown field '" + key + "' in requirement '" + id + "'");
      }
    }
    if (r.required && !r.min_level) r.min_level = kDefaultMinLevel;
    if (!r.required && r.min_level) {
      BadProfile("min_level given for '" + id + "' which is not required");
    }
    profile.requirements[id] = r;
  }
  return profile;
}

nlohmann::json ToJson(const Requirement& r) {
  nlohmann::json j = {{"attribute_id", r.attribute_id},
                      {"level", PreferenceLevelLabel(r.level)},
                      {"required", r.required}};
  if (r.min_level) j["min_level"] = *r.min_level;
  return j;
}

nlohmann::json ToJson(const PreferenceProfile& profile) {
  nlohmann::json reqs = nlohmann::json::object();
  for (const auto& [id, r] : profile.requirements) {
    nlohmann::json entry = {{"level", PreferenceLevelLabel(r.level)},
                            {"required", r.required}};
    if (r.min_level) entry["min_level"] = *r.min_level;
    reqs[id] = entry;
  }
  return {{"requirements", reqs}};
}

}  // namespace harmonica::blade
