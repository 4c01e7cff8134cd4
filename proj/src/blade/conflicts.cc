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

#include "harmonica/blade/conflicts.h"

#include "harmonica/error.h"

namespace harmonica::blade {

namespace {

bool Triggers(const Requirement& r, PreferenceLevel threshold) {
  return r.required || ToInt(r.level) >= ToInt(threshold);
}

}  // namespace

bool ConflictReport::HasErrors() const {
  for (const auto& v : violations) {
    if (v.severity == kb::Severity::kError) return true;
  }
  return false;
}

std::optional<kb::Severity> EvaluateRule(const kb::ConflictRule& rule,
                                         const Requirement& left,
                                         const Requirement& right) {
  if (!Triggers(left, rule.threshold) || !Triggers(right, rule.threshold)) {
    return std::nullopt;
  }
  return left.required || right.required ? kb::Severity::kError
                                         : kb::Severity::kWarning;
}

ConflictReport CheckConflicts(const PreferenceProfile& profile,
                              const kb::KnowledgeBase& kb) {
  for (const auto& [id, req] : profile.requirements) {
    if (kb.FindAttribute(id) == nullptr) {
      throw Error(ErrorCode::kUnknownAttribute,
                  "unknown attribute '" + id + "' in profile", {{"id", id}});
    }
  }
  ConflictReport report;
  for (const auto& rule : kb.conflict_rules) {
    Requirement left = profile.Get(rule.left);
    Requirement right = profile.Get(rule.right);
    if (auto severity = EvaluateRule(rule, left, right)) {
      report.violations.push_back({rule, left, right, *severity});
    }
  }
  return report;
}

std::map<std::string, std::vector<kb::ConflictRule>> BlockedAttributes(
    const PreferenceProfile& profile, const kb::KnowledgeBase& kb) {
  std::map<std::string, std::vector<kb::ConflictRule>> blocked;
  for (const auto& attr : kb.attributes) {
    if (profile.IsActive(attr.id)) continue;
    for (const auto& rule : kb.conflict_rules) {
      const std::string* other = nullptr;
      if (rule.left == attr.id) other = &rule.right;
      if (rule.right == attr.id) other = &rule.left;
      if (other == nullptr) continue;
      Requirement candidate;
      candidate.attribute_id = attr.id;
      candidate.level = rule.threshold;
      auto severity = EvaluateRule(rule, candidate, profile.Get(*other));
      if (severity == kb::Severity::kError) blocked[attr.id].push_back(rule);
    }
  }
  return blocked;
}

nlohmann::json ToJson(const ConflictViolation& v) {
  return {{"rule", kb::ToJson(v.rule)},
          {"left_requirement", ToJson(v.left_requirement)},
          {"right_requirement", ToJson(v.right_requirement)},
          {"severity", kb::SeverityName(v.severity)}};
}

nlohmann::json ToJson(const ConflictReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back(ToJson(v));
  return {{"violations", violations}, {"has_errors", report.HasErrors()}};
}

nlohmann::json BlockedToJson(
    const std::map<std::string, std::vector<kb::ConflictRule>>& blocked) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, rules] : blocked) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& rule : rules) list.push_back(kb::ToJson(rule));
    out[id] = list;
  }
  return out;
}

}  // namespace harmonica::blade
