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

#include "harmonica/banco/configuration.h"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "harmonica/error.h"

namespace harmonica::banco {

namespace {

// Three-valued truth for partial configurations.
enum class Tri { kFalse, kTrue, kUnknown };

// Per-feature decision: +1 selected, -1 deselected, 0 open.
using States = std::vector<int>;

enum class RuleKind { kRoot, kParent, kMandatory, kXor, kOr, kRequires, kExcludes };

struct Rule {
  RuleKind kind;
  size_t a = 0;  // root / child / parent-of-group / constraint source
  size_t b = 0;  // parent / mandatory child / constraint target
  std::vector<size_t> group;
};

std::vector<Rule> CompileRules(const FeatureModel& model) {
  std::vector<Rule> rules;
  rules.push_back({RuleKind::kRoot, model.IndexOf(model.root().id), 0, {}});
  for (size_t i = 0; i < model.size(); ++i) {
    const Feature& f = model.features()[i];
    if (f.parent) rules.push_back({RuleKind::kParent, i, model.IndexOf(*f.parent), {}});
    const auto& children = model.ChildrenOf(i);
    switch (f.group) {
      case GroupKind::kNone:
        for (size_t c : children) {
          if (model.features()[c].variability == Variability::kMandatory) {
            rules.push_back({RuleKind::kMandatory, i, c, {}});
          }
        }
        break;
      case GroupKind::kXor:
        if (!children.empty()) rules.push_back({RuleKind::kXor, i, 0, children});
        break;
      case GroupKind::kOr:
        if (!children.empty()) rules.push_back({RuleKind::kOr, i, 0, children});
        break;
    }
  }
  for (const auto& c : model.constraints()) {
    rules.push_back({c.kind == ConstraintKind::kRequires ? RuleKind::kRequires
                                                         : RuleKind::kExcludes,
                     model.IndexOf(c.from), model.IndexOf(c.to), {}});
  }
  return rules;
}

Tri Value(int state) {
  return state > 0 ? Tri::kTrue : state < 0 ? Tri::kFalse : Tri::kUnknown;
}

Tri Implies(Tri p, Tri q) {
  if (p == Tri::kFalse || q == Tri::kTrue) return Tri::kTrue;
  if (p == Tri::kTrue && q == Tri::kFalse) return Tri::kFalse;
  return Tri::kUnknown;
}

Tri Evaluate(const Rule& rule, const States& s) {
  switch (rule.kind) {
    case RuleKind::kRoot:
      return Value(s[rule.a]);
    case RuleKind::kParent:
      return Implies(Value(s[rule.a]), Value(s[rule.b]));
    case RuleKind::kMandatory:
    case RuleKind::kRequires:
      return Implies(Value(s[rule.a]), Value(s[rule.b]));
    case RuleKind::kExcludes:
      if (s[rule.a] > 0 && s[rule.b] > 0) return Tri::kFalse;
      if (s[rule.a] < 0 || s[rule.b] < 0) return Tri::kTrue;
      return Tri::kUnknown;
    case RuleKind::kXor:
    case RuleKind::kOr: {
      size_t selected = 0, open = 0;
      for (size_t c : rule.group) {
        selected += s[c] > 0;
        open += s[c] == 0;
      }
      Tri group;
      if (rule.kind == RuleKind::kXor) {
        if (selected > 1) {
          group = Tri::kFalse;
        } else if (open == 0) {
          group = selected == 1 ? Tri::kTrue : Tri::kFalse;
        } else {
          group = Tri::kUnknown;
        }
      } else {
        group = selected > 0 ? Tri::kTrue : open == 0 ? Tri::kFalse : Tri::kUnknown;
      }
      return Implies(Value(s[rule.a]), group);
    }
  }
  return Tri::kUnknown;
}

std::vector<std::string> RuleFeatures(const Rule& rule, const FeatureModel& model) {
  const auto& f = model.features();
  switch (rule.kind) {
    case RuleKind::kRoot: return {f[rule.a].id};
    case RuleKind::kXor:
    case RuleKind::kOr: {
      std::vector<std::string> out{f[rule.a].id};
      for (size_t c : rule.group) out.push_back(f[c].id);
      return out;
    }
    default: return {f[rule.a].id, f[rule.b].id};
  }
}

Violation Describe(const Rule& rule, const FeatureModel& model) {
  const auto& f = model.features();
  const std::string& a = f[rule.a].id;
  switch (rule.kind) {
    case RuleKind::kRoot:
      return {"root", RuleFeatures(rule, model), "root feature '" + a + "' must be selected"};
    case RuleKind::kParent:
      return {"parent", RuleFeatures(rule, model),
              "feature '" + a + "' is selected but its parent '" + f[rule.b].id + "' is not"};
    case RuleKind::kMandatory:
      return {"mandatory", RuleFeatures(rule, model),
              "mandatory feature '" + f[rule.b].id + "' of selected '" + a + "' is not selected"};
    case RuleKind::kXor:
      return {"xor-group", RuleFeatures(rule, model),
              "xor group '" + a + "' needs exactly one selected child"};
    case RuleKind::kOr:
      return {"or-group", RuleFeatures(rule, model),
              "or group '" + a + "' needs at least one selected child"};
    case RuleKind::kRequires:
      return {"requires", RuleFeatures(rule, model),
              "'" + a + "' requires '" + f[rule.b].id + "'"};
    case RuleKind::kExcludes:
      return {"excludes", RuleFeatures(rule, model),
              "'" + a + "' excludes '" + f[rule.b].id + "'"};
  }
  return {};
}

States ToStates(const Configuration& config, const FeatureModel& model) {
  States s(model.size(), 0);
  for (const auto& id : config.selected) s[model.IndexOf(id)] = 1;
  for (const auto& id : config.deselected) {
    size_t i = model.IndexOf(id);
    s[i] = s[i] > 0 ? 2 : -1;  // 2 marks "both", reported as a violation
  }
  return s;
}

Configuration FromStates(const States& s, const FeatureModel& model) {
  Configuration config;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 0) config.selected.insert(model.features()[i].id);
    if (s[i] < 0) config.deselected.insert(model.features()[i].id);
  }
  return config;
}

[[noreturn]] void ThrowContradiction(std::vector<std::string> features,
                                     const std::string& message) {
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()), features.end());
  throw Error(ErrorCode::kContradiction, "contradiction: " + message,
              {{"features", features}});
}

// Returns false when nothing could be forced.
bool PropagateRule(const Rule& rule, States& s, const FeatureModel& model) {
  bool changed = false;
  auto force = [&](size_t i, int value) {
    if (s[i] == value) return;
    if (s[i] != 0) {
      auto features = RuleFeatures(rule, model);
      features.push_back(model.features()[i].id);
      ThrowContradiction(features, Describe(rule, model).message + " (forces '" +
                                       model.features()[i].id + "' both ways)");
    }
    s[i] = value;
    changed = true;
  };

  if (Evaluate(rule, s) == Tri::kFalse) {
    ThrowContradiction(RuleFeatures(rule, model), Describe(rule, model).message);
  }
  switch (rule.kind) {
    case RuleKind::kRoot:
      force(rule.a, 1);
      break;
    case RuleKind::kParent:
    case RuleKind::kMandatory:
    case RuleKind::kRequires:
      if (s[rule.a] > 0) force(rule.b, 1);
      if (s[rule.b] < 0) force(rule.a, -1);
      break;
    case RuleKind::kExcludes:
      if (s[rule.a] > 0) force(rule.b, -1);
      if (s[rule.b] > 0) force(rule.a, -1);
      break;
    case RuleKind::kXor:
    case RuleKind::kOr: {
      std::vector<size_t> open;
      std::optional<size_t> selected_child;
      for (size_t c : rule.group) {
        if (s[c] == 0) open.push_back(c);
        if (s[c] > 0) selected_child = c;
      }
      if (rule.kind == RuleKind::kXor && selected_child) {
        for (size_t c : rule.group) {
          if (c != *selected_child) force(c, -1);
        }
        break;
      }
      bool none_selected = !selected_child;
      if (none_selected && open.empty()) force(rule.a, -1);
      if (none_selected && open.size() == 1 && s[rule.a] > 0) force(open.front(), 1);
      break;
    }
  }
  return changed;
}

// Selection bitmask over model feature indexes (enumeration only).
using Mask = std::uint32_t;
constexpr size_t kIntermediateCap = size_t{1} << 22;

void CheckCap(size_t n) {
  if (n > kIntermediateCap) {
    throw Error(ErrorCode::kExceededLimit,
                "configuration space too large to enumerate");
  }
}

std::vector<Mask> Cross(const std::vector<Mask>& lhs, const std::vector<Mask>& rhs) {
  CheckCap(lhs.size() * rhs.size());
  std::vector<Mask> out;
  out.reserve(lhs.size() * rhs.size());
  for (Mask l : lhs) {
    for (Mask r : rhs) out.push_back(l | r);
  }
  return out;
}

// All selections of the subtree rooted at `index`, given it is selected.
std::vector<Mask> SubtreeSelections(size_t index, const FeatureModel& model) {
  const Feature& f = model.features()[index];
  const auto& children = model.ChildrenOf(index);
  std::vector<Mask> acc{Mask{1} << index};
  switch (f.group) {
    case GroupKind::kNone:
      for (size_t c : children) {
        auto options = SubtreeSelections(c, model);
        if (model.features()[c].variability == Variability::kOptional) {
          options.push_back(0);
        }
        acc = Cross(acc, options);
      }
      break;
    case GroupKind::kXor: {
      if (children.empty()) break;
      std::vector<Mask> options;
      for (size_t c : children) {
        auto sub = SubtreeSelections(c, model);
        options.insert(options.end(), sub.begin(), sub.end());
      }
      acc = Cross(acc, options);
      break;
    }
    case GroupKind::kOr: {
      if (children.empty()) break;
      std::vector<Mask> combos{0};
      for (size_t c : children) {
        auto options = SubtreeSelections(c, model);
        options.push_back(0);
        combos = Cross(combos, options);
      }
      combos.erase(std::remove(combos.begin(), combos.end(), Mask{0}), combos.end());
      acc = Cross(acc, combos);
      break;
    }
  }
  return acc;
}

}  // namespace

std::set<std::string> Configuration::Open(const FeatureModel& model) const {
  std::set<std::string> open;
  for (const auto& f : model.features()) {
    if (selected.count(f.id) == 0 && deselected.count(f.id) == 0) open.insert(f.id);
  }
  return open;
}

ValidityReport ValidateConfiguration(const Configuration& config,
                                     const FeatureModel& model) {
  States s = ToStates(config, model);
  ValidityReport report;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 2) {
      const std::string& id = model.features()[i].id;
      report.violations.push_back(
          {"disjoint", {id}, "feature '" + id + "' is both selected and deselected"});
      s[i] = 1;
    }
  }
  for (const auto& rule : CompileRules(model)) {
    if (Evaluate(rule, s) == Tri::kFalse) report.violations.push_back(Describe(rule, model));
  }
  bool complete = std::none_of(s.begin(), s.end(), [](int v) { return v == 0; });
  report.status = !report.violations.empty() ? Validity::kInvalid
                  : complete                 ? Validity::kValid
                                             : Validity::kIncomplete;
  return report;
}

Configuration CompleteConfiguration(const Configuration& partial,
                                    const FeatureModel& model) {
  States s = ToStates(partial, model);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 2) {
      ThrowContradiction({model.features()[i].id},
                         "feature '" + model.features()[i].id +
                             "' is both selected and deselected");
    }
  }
  const auto rules = CompileRules(model);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) changed |= PropagateRule(rule, s, model);
  }
  return FromStates(s, model);
}

std::vector<Configuration> EnumerateConfigurations(const FeatureModel& model,
                                                   size_t limit) {
  if (model.size() > kMaxEnumerableFeatures) {
    throw Error(ErrorCode::kExceededLimit,
                "model has " + std::to_string(model.size()) +
                    " features; enumeration is capped at " +
                    std::to_string(kMaxEnumerableFeatures),
                {{"features", model.size()}});
  }
  std::vector<Mask> candidates =
      SubtreeSelections(model.IndexOf(model.root().id), model);

  std::vector<std::pair<size_t, size_t>> requires_edges, excludes_edges;
  for (const auto& c : model.constraints()) {
    auto edge = std::make_pair(model.IndexOf(c.from), model.IndexOf(c.to));
    (c.kind == ConstraintKind::kRequires ? requires_edges : excludes_edges).push_back(edge);
  }
  std::vector<Configuration> out;
  for (Mask m : candidates) {
    auto has = [m](size_t i) { return ((m >> i) & 1U) != 0; };
    bool ok = std::all_of(requires_edges.begin(), requires_edges.end(),
                          [&](auto e) { return !has(e.first) || has(e.second); }) &&
              std::none_of(excludes_edges.begin(), excludes_edges.end(),
                           [&](auto e) { return has(e.first) && has(e.second); });
    if (!ok) continue;
    if (out.size() == limit) {
      throw Error(ErrorCode::kExceededLimit,
                  "more than " + std::to_string(limit) + " configurations",
                  {{"limit", limit}});
    }
    Configuration config;
    for (size_t i = 0; i < model.size(); ++i) {
      (has(i) ? config.selected : config.deselected).insert(model.features()[i].id);
    }
    out.push_back(std::move(config));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Configuration PreselectFromRecommendation(const blade::RecommendationReport& report,
                                          const FeatureModel& model) {
  const std::string* top = report.TopBlockchain();
  if (top == nullptr) {
    throw Error(ErrorCode::kMissingRanking,
                "recommendation report has no ranking to preselect from");
  }
  auto chain = model.blockchain_feature_map().find(*top);
  if (chain == model.blockchain_feature_map().end()) {
    throw Error(ErrorCode::kUnmappedBlockchain,
                "blockchain '" + *top + "' has no feature in the model", {{"id", *top}});
  }
  Configuration config;
  config.selected.insert(chain->second);
  for (const auto& rec : report.patterns) {
    if (!rec.score || *rec.score <= 0.0) continue;
    auto mapped = model.pattern_feature_map().find(rec.pattern_id);
    if (mapped != model.pattern_feature_map().end()) config.selected.insert(mapped->second);
  }
  return config;
}

nlohmann::json ToJson(const Configuration& config) {
  return {{"selected", config.selected}, {"deselected", config.deselected}};
}

nlohmann::json ToJson(const Configuration& config, const FeatureModel& model) {
  nlohmann::json j = ToJson(config);
  j["open"] = config.Open(model);
  return j;
}

nlohmann::json ToJson(const ValidityReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"rule", v.rule}, {"features", v.features}, {"message", v.message}});
  }
  return {{"status", ValidityName(report.status)}, {"violations", violations}};
}

Configuration ConfigurationFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kBadRequest, "configuration must be an object");
  Configuration config;
  for (const auto& [key, value] : j.items()) {
    std::set<std::string>* target = key == "selected"     ? &config.selected
                                    : key == "deselected" ? &config.deselected
                                                          : nullptr;
    if (key == "open") continue;
    if (target == nullptr) {
      throw Error(ErrorCode::kBadRequest, "unknown configuration field '" + key + "'");
    }
    if (!value.is_array()) {
      throw Error(ErrorCode::kBadRequest, "'" + key + "' must be an array of feature ids");
    }
    for (const auto& id : value) {
      if (!id.is_string()) {
        throw Error(ErrorCode::kBadRequest, "'" + key + "' must hold strings");
      }
      target->insert(id.get<std::string>());
    }
  }
  return config;
}

std::string_view ValidityName(Validity status) {
  switch (status) {
    case Validity::kValid: return "valid";
    case Validity::kInvalid: return "invalid";
    case Validity::kIncomplete: return "incomplete";
  }
  return "incomplete";
}

}  // namespace harmonica::banco
