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

#ifndef HARMONICA_BLADE_CONFLICTS_H_
#define HARMONICA_BLADE_CONFLICTS_H_

#include <map>
#include <string>
#include <vector>

#include "harmonica/blade/profile.h"
#include "harmonica/kb/knowledge_base.h"
#include "json.hpp"

namespace harmonica::blade {

struct ConflictViolation {
  kb::ConflictRule rule;
  Requirement left_requirement;
  Requirement right_requirement;
  kb::Severity severity = kb::Severity::kWarning;
};

struct ConflictReport {
  std::vector<ConflictViolation> violations;

  bool HasErrors() const;
};

// Severity of one rule against a pair of requirements, or nullopt when the
// rule does not fire. A side triggers when it is required or its level meets
// the threshold; both sides must trigger. Any required side makes it an error.
std::optional<kb::Severity> EvaluateRule(const kb::ConflictRule& rule,
                                         const Requirement& left,
                                         const Requirement& right);

// Violations come out in rule order. Throws Error(kUnknownAttribute).
ConflictReport CheckConflicts(const PreferenceProfile& profile,
                              const kb::KnowledgeBase& kb);

// For every attribute not active in `profile`, the rules that would fire as
// errors if it were added at or above the rule threshold. Attributes with no
// such rule are omitted.
std::map<std::string, std::vector<kb::ConflictRule>> BlockedAttributes(
    const PreferenceProfile& profile, const kb::KnowledgeBase& kb);

nlohmann::json ToJson(const ConflictViolation& violation);
nlohmann::json ToJson(const ConflictReport& report);
nlohmann::json BlockedToJson(
    const std::map<std::string, std::vector<kb::ConflictRule>>& blocked);

}  // namespace harmonica::blade

#endif  // HARMONICA_BLADE_CONFLICTS_H_
