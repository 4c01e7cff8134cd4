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

#include <map>
#include <regex>
#include <set>
#include <utility>

#include "harmonica/banco/template.h"
#include "harmonica/error.h"
#include "harmonica/kb/knowledge_base.h"

namespace harmonica::kb {

namespace {

class Reporter {
 public:
  explicit Reporter(ValidationReport& report) : report_(report) {}

  void Error(std::string location, std::string message) {
    report_.issues.push_back(
        {Severity::kError, std::move(location), std::move(message)});
  }
  void Warning(std::string location, std::string message) {
    report_.issues.push_back(
        {Severity::kWarning, std::move(location), std::move(message)});
  }

 private:
  ValidationReport& report_;
};

std::string Loc(const char* file, const std::string& id,
                const std::string& field = "") {
  std::string out = std::string(file) + ":" + id;
  if (!field.empty()) out += "." + field;
  return out;
}

// Flags bad and duplicate ids in one collection.
template <typename T>
void CheckIds(const std::vector<T>& items, const char* file, Reporter& r) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (!IsKebabId(item.id)) {
      r.Error(Loc(file, item.id), "invalid id '" + item.id +
                                      "' (expected lowercase kebab-case)");
    }
    if (!seen.insert(item.id).second) {
      r.Error(Loc(file, item.id), "duplicate id '" + item.id + "'");
    }
  }
}

bool HasPathEscape(const std::string& path) {
  if (path.empty() || path.front() == '/' || path.front() == '\\') return true;
  if (path.find('\\') != std::string::npos) return true;
  if (path.size() >= 2 && path[1] == ':') return true;
  size_t start = 0;
  while (start <= path.size()) {
    size_t end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    if (path.compare(start, end - start, "..") == 0 && end - start == 2) {
      return true;
    }
    start = end + 1;
  }
  return false;
}

void CheckAttributes(const KnowledgeBase& kb, Reporter& r) {
  CheckIds(kb.attributes, kAttributesFile, r);
  for (const auto& a : kb.attributes) {
    if (a.scale_min >= a.scale_max) {
      r.Error(Loc(kAttributesFile, a.id, "scale"),
              "attribute '" + a.id + "' has scale_min >= scale_max");
    } else if (a.scale_min != kScaleMin || a.scale_max != kScaleMax) {
      r.Error(Loc(kAttributesFile, a.id, "scale"),
              "attribute '" + a.id + "' must use the 1..5 scale");
    }
    if (a.name.empty()) {
      r.Error(Loc(kAttributesFile, a.id, "name"),
              "attribute '" + a.id + "' has an empty name");
    }
  }
}

void CheckBlockchains(const KnowledgeBase& kb, Reporter& r) {
  CheckIds(kb.blockchains, kBlockchainsFile, r);
  for (const auto& b : kb.blockchains) {
    for (const auto& a : kb.attributes) {
      auto it = b.scores.find(a.id);
      if (it == b.scores.end()) {
        r.Error(Loc(kBlockchainsFile, b.id, "scores"),
                "blockchain '" + b.id + "' is missing a score for '" + a.id +
                    "'");
      } else if (it->second < a.scale_min || it->second > a.scale_max) {
        r.Error(Loc(kBlockchainsFile, b.id, "scores." + a.id),
                "score out of scale: blockchain '" + b.id + "' scores " +
                    std::to_string(it->second) + " on '" + a.id + "' [" +
                    std::to_string(a.scale_min) + "," +
                    std::to_string(a.scale_max) + "]");
      }
    }
    for (const auto& [attr, score] : b.scores) {
      if (kb.FindAttribute(attr) == nullptr) {
        r.Error(Loc(kBlockchainsFile, b.id, "scores." + attr),
                "unresolved attribute reference '" + attr +
                    "' in blockchain '" + b.id + "'");
      }
    }
    for (const auto& cap : b.capabilities) {
      if (!IsKebabId(cap)) {
        r.Error(Loc(kBlockchainsFile, b.id, "capabilities"),
                "invalid capability tag '" + cap + "' in blockchain '" + b.id +
                    "'");
      }
    }
  }
}

void CheckPatterns(const KnowledgeBase& kb, Reporter& r) {
  CheckIds(kb.patterns, kPatternsFile, r);
  std::set<std::string> offered;
  for (const auto& b : kb.blockchains) {
    offered.insert(b.capabilities.begin(), b.capabilities.end());
  }
  for (const auto& p : kb.patterns) {
    for (const auto& attr : p.addresses) {
      if (kb.FindAttribute(attr) == nullptr) {
        r.Error(Loc(kPatternsFile, p.id, "addresses"),
                "unresolved attribute reference '" + attr + "' in pattern '" +
                    p.id + "'");
      }
    }
    for (const auto& cap : p.requires_capabilities) {
      if (offered.count(cap) == 0) {
        r.Warning(Loc(kPatternsFile, p.id, "requires_capabilities"),
                  "pattern '" + p.id + "' requires capability '" + cap +
                      "' that no blockchain provides");
      }
    }
    for (const auto& other : p.conflicts_with) {
      const PatternDescriptor* target = kb.FindPattern(other);
      if (other == p.id) {
        r.Error(Loc(kPatternsFile, p.id, "conflicts_with"),
                "pattern '" + p.id + "' conflicts with itself");
      } else if (target == nullptr) {
        r.Error(Loc(kPatternsFile, p.id, "conflicts_with"),
                "unresolved pattern reference '" + other + "' in pattern '" +
                    p.id + "'");
      } else if (target->conflicts_with.count(p.id) == 0) {
        r.Warning(Loc(kPatternsFile, p.id, "conflicts_with"),
                  "one-directional conflict '" + p.id + "' -> '" + other +
                      "' (symmetrized on load)");
      }
    }
    if (p.variant_of && kb.FindPattern(*p.variant_of) == nullptr) {
      r.Error(Loc(kPatternsFile, p.id, "variant_of"),
              "unresolved pattern reference '" + *p.variant_of +
                  "' in pattern '" + p.id + "'");
    }
  }
  // variant_of chains: follow each chain, bounded by the pattern count.
  for (const auto& p : kb.patterns) {
    std::set<std::string> visited{p.id};
    const PatternDescriptor* cur = &p;
    while (cur != nullptr && cur->variant_of) {
      if (!visited.insert(*cur->variant_of).second) {
        r.Error(Loc(kPatternsFile, p.id, "variant_of"),
                "variant_of cycle through pattern '" + p.id + "'");
        break;
      }
      cur = kb.FindPattern(*cur->variant_of);
    }
  }
}

void CheckConflictRules(const KnowledgeBase& kb, Reporter& r) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i < kb.conflict_rules.size(); ++i) {
    const auto& rule = kb.conflict_rules[i];
    std::string id = rule.left + "/" + rule.right;
    std::string loc = Loc(kConflictRulesFile, "rules[" + std::to_string(i) + "]");
    if (rule.left == rule.right) {
      r.Error(loc, "conflict rule '" + id + "' has left == right");
    }
    for (const auto* side : {&rule.left, &rule.right}) {
      if (kb.FindAttribute(*side) == nullptr) {
        r.Error(loc, "unresolved attribute reference '" + *side +
                         "' in conflict rule '" + id + "'");
      }
    }
    auto key = std::minmax(rule.left, rule.right);
    if (!pairs.emplace(key.first, key.second).second) {
      r.Error(loc, "duplicate conflict rule '" + id + "'");
    }
  }
}

void CheckAssets(const KnowledgeBase& kb, Reporter& r) {
  CheckIds(kb.assets, kAssetsFile, r);
  std::map<std::string, std::string> literal_paths;
  for (const auto& asset : kb.assets) {
    if (HasPathEscape(asset.output_path_template)) {
      r.Error(Loc(kAssetsFile, asset.id, "output_path_template"),
              "path escape: asset '" + asset.id + "' output path '" +
                  asset.output_path_template + "' is not a contained relative path");
    }
    for (const auto& [field, text] :
         {std::pair<const char*, const std::string*>{"output_path_template",
                                                     &asset.output_path_template},
          {"body", &asset.body}}) {
      try {
        banco::ParseTemplate(*text);
      } catch (const harmonica::Error& e) {
        r.Error(Loc(kAssetsFile, asset.id, field),
                "template error in asset '" + asset.id + "': " + e.what());
      }
    }
    for (const auto& feature : asset.activating_features) {
      if (!IsKebabId(feature)) {
        r.Error(Loc(kAssetsFile, asset.id, "activating_features"),
                "invalid feature id '" + feature + "' in asset '" + asset.id +
                    "'");
      }
    }
  }
}

}  // namespace

bool IsKebabId(std::string_view id) {
  static const std::regex kPattern("^[a-z0-9]+(-[a-z0-9]+)*$");
  return std::regex_match(id.begin(), id.end(), kPattern);
}

size_t ValidationReport::ErrorCount() const {
  size_t n = 0;
  for (const auto& issue : issues) n += issue.severity == Severity::kError;
  return n;
}

size_t ValidationReport::WarningCount() const {
  return issues.size() - ErrorCount();
}

ValidationReport ValidateKnowledgeBase(const KnowledgeBase& kb) {
  ValidationReport report;
  Reporter r(report);
  if (kb.version.empty()) r.Error("kb", "missing version");
  CheckAttributes(kb, r);
  CheckBlockchains(kb, r);
  CheckPatterns(kb, r);
  CheckConflictRules(kb, r);
  CheckAssets(kb, r);
  return report;
}

void SymmetrizePatternConflicts(KnowledgeBase& kb) {
  std::vector<std::pair<std::string, std::string>> links;
  for (const auto& p : kb.patterns) {
    for (const auto& other : p.conflicts_with) links.emplace_back(p.id, other);
  }
  for (const auto& [from, to] : links) {
    for (auto& p : kb.patterns) {
      if (p.id == to) p.conflicts_with.insert(from);
    }
  }
}

nlohmann::json ToJson(const ValidationReport& report) {
  nlohmann::json issues = nlohmann::json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"severity", SeverityName(issue.severity)},
                      {"location", issue.location},
                      {"message", issue.message}});
  }
  return {{"errors", report.ErrorCount()},
          {"warnings", report.WarningCount()},
          {"issues", issues}};
}

}  // namespace harmonica::kb
