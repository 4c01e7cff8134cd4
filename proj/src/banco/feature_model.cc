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

#include "harmonica/banco/feature_model.h"

#include <fstream>
#include <set>
#include <sstream>

#include "harmonica/error.h"
#include "harmonica/kb/knowledge_base.h"

namespace harmonica::banco {

namespace {

using nlohmann::json;

[[noreturn]] void Structural(const std::string& message, json details = json::object()) {
  throw Error(ErrorCode::kStructuralError, message, std::move(details));
}

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kParseError, "feature model: " + message,
              {{"file", "feature_model.json"}, {"line", 0}, {"message", message}});
}

void Strict(const json& obj, std::initializer_list<const char*> allowed,
            const std::string& what) {
  if (!obj.is_object()) Malformed(what + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known |= key == a;
    if (!known) Malformed("unknown field '" + key + "' in " + what);
  }
}

std::string Str(const json& obj, const char* key, const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    Malformed("field '" + std::string(key) + "' of " + what + " must be a string");
  }
  return it->get<std::string>();
}

std::map<std::string, std::string> StringMap(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_object()) {
    Malformed("field '" + std::string(key) + "' must be an object");
  }
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : it->items()) {
    if (!v.is_string()) Malformed("values of '" + std::string(key) + "' must be strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

FeatureModel::FeatureModel(std::string version, std::vector<Feature> features,
                           std::vector<CrossTreeConstraint> constraints,
                           std::map<std::string, std::string> blockchain_feature_map,
                           std::map<std::string, std::string> pattern_feature_map)
    : version_(std::move(version)),
      features_(std::move(features)),
      constraints_(std::move(constraints)),
      blockchain_feature_map_(std::move(blockchain_feature_map)),
      pattern_feature_map_(std::move(pattern_feature_map)) {
  if (features_.empty()) Structural("feature model has no features");
  for (size_t i = 0; i < features_.size(); ++i) {
    const auto& f = features_[i];
    if (!kb::IsKebabId(f.id)) Structural("invalid feature id '" + f.id + "'", {{"id", f.id}});
    if (!index_.emplace(f.id, i).second) {
      Structural("duplicate feature id '" + f.id + "'", {{"id", f.id}});
    }
  }

  std::vector<std::string> roots;
  children_.assign(features_.size(), {});
  for (size_t i = 0; i < features_.size(); ++i) {
    const auto& f = features_[i];
    if (!f.parent) {
      roots.push_back(f.id);
      root_ = i;
      continue;
    }
    auto parent = index_.find(*f.parent);
    if (parent == index_.end()) {
      Structural("feature '" + f.id + "' has unknown parent '" + *f.parent + "'",
                 {{"id", f.id}});
    }
    children_[parent->second].push_back(i);
  }
  if (roots.size() > 1) {
    throw Error(ErrorCode::kMultipleRoots, "feature model has more than one root",
                {{"roots", roots}});
  }
  // With every parent resolved, a missing root or a feature that cannot reach
  // the root within |features| steps means the parent links form a cycle.
  for (size_t i = 0; i < features_.size(); ++i) {
    size_t cur = i;
    size_t steps = 0;
    while (features_[cur].parent) {
      if (++steps > features_.size()) {
        throw Error(ErrorCode::kCyclicTree,
                    "feature tree has a cycle through '" + features_[i].id + "'",
                    {{"id", features_[i].id}});
      }
      cur = index_.at(*features_[cur].parent);
    }
  }
  if (roots.empty()) {
    throw Error(ErrorCode::kCyclicTree, "feature tree has no root (cyclic parents)");
  }
  if (root().variability != Variability::kMandatory) {
    Structural("root feature '" + root().id + "' must be mandatory", {{"id", root().id}});
  }

  for (size_t i = 0; i < features_.size(); ++i) {
    if (features_[i].group == GroupKind::kNone) continue;
    for (size_t child : children_[i]) {
      if (features_[child].variability != Variability::kOptional) {
        Structural(std::string(GroupKindName(features_[i].group)) + " group '" +
                       features_[i].id + "' has mandatory child '" +
                       features_[child].id + "'",
                   {{"group", features_[i].id}, {"child", features_[child].id}});
      }
    }
  }

  for (const auto& c : constraints_) {
    if (Find(c.from) == nullptr || Find(c.to) == nullptr) {
      Structural("constraint references unknown feature ('" + c.from + "', '" + c.to + "')",
                 {{"from", c.from}, {"to", c.to}});
    }
    if (c.from == c.to) {
      Structural("constraint on '" + c.from + "' refers to itself", {{"from", c.from}});
    }
  }

  std::set<std::string> chain_parents;
  for (const auto& [chain, feature] : blockchain_feature_map_) {
    const Feature* f = Find(feature);
    if (f == nullptr) {
      Structural("blockchain '" + chain + "' maps to unknown feature '" + feature + "'");
    }
    chain_parents.insert(f->parent.value_or(""));
  }
  if (!chain_parents.empty()) {
    const Feature* group = Find(*chain_parents.begin());
    if (chain_parents.size() != 1 || group == nullptr || group->group != GroupKind::kXor) {
      Structural("blockchain features must form a single xor group");
    }
  }
  for (const auto& [pattern, feature] : pattern_feature_map_) {
    if (Find(feature) == nullptr) {
      Structural("pattern '" + pattern + "' maps to unknown feature '" + feature + "'");
    }
  }
}

const Feature* FeatureModel::Find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &features_[it->second];
}

size_t FeatureModel::IndexOf(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownFeature, "unknown feature '" + std::string(id) + "'",
                {{"id", id}});
  }
  return it->second;
}

FeatureModel FeatureModelFromJson(const json& document) {
  Strict(document,
         {"version", "features", "constraints", "blockchain_feature_map",
          "pattern_feature_map"},
         "document");
  std::string version = Str(document, "version", "document");

  std::vector<Feature> features;
  if (!document.contains("features") || !document["features"].is_array()) {
    Malformed("'features' must be an array");
  }
  for (const auto& j : document["features"]) {
    Strict(j, {"id", "name", "parent", "variability", "group"}, "feature");
    Feature f;
    f.id = Str(j, "id", "feature");
    f.name = Str(j, "name", "feature '" + f.id + "'");
    if (!j.contains("parent")) Malformed("feature '" + f.id + "' needs 'parent'");
    if (!j["parent"].is_null()) f.parent = Str(j, "parent", "feature '" + f.id + "'");
    std::string variability = Str(j, "variability", "feature '" + f.id + "'");
    if (variability == "mandatory") {
      f.variability = Variability::kMandatory;
    } else if (variability == "optional") {
      f.variability = Variability::kOptional;
    } else {
      Malformed("bad variability '" + variability + "'");
    }
    std::string group = Str(j, "group", "feature '" + f.id + "'");
    if (group == "none") {
      f.group = GroupKind::kNone;
    } else if (group == "xor") {
      f.group = GroupKind::kXor;
    } else if (group == "or") {
      f.group = GroupKind::kOr;
    } else {
      Malformed("bad group '" + group + "'");
    }
    features.push_back(std::move(f));
  }

  std::vector<CrossTreeConstraint> constraints;
  if (!document.contains("constraints") || !document["constraints"].is_array()) {
    Malformed("'constraints' must be an array");
  }
  for (const auto& j : document["constraints"]) {
    Strict(j, {"kind", "from", "to"}, "constraint");
    CrossTreeConstraint c;
    std::string kind = Str(j, "kind", "constraint");
    if (kind == "requires") {
      c.kind = ConstraintKind::kRequires;
    } else if (kind == "excludes") {
      c.kind = ConstraintKind::kExcludes;
    } else {
      Malformed("bad constraint kind '" + kind + "'");
    }
    c.from = Str(j, "from", "constraint");
    c.to = Str(j, "to", "constraint");
    constraints.push_back(std::move(c));
  }

  return FeatureModel(std::move(version), std::move(features), std::move(constraints),
                      StringMap(document, "blockchain_feature_map"),
                      StringMap(document, "pattern_feature_map"));
}

FeatureModel LoadFeatureModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingFile, "cannot open feature model '" + path.string() + "'",
                {{"name", path.filename().string()}, {"path", path.string()}});
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json document;
  try {
    document = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what(),
                {{"file", path.string()}, {"byte", e.byte}});
  }
  return FeatureModelFromJson(document);
}

json ToJson(const FeatureModel& model) {
  json features = json::array();
  for (const auto& f : model.features()) {
    features.push_back({{"id", f.id},
                        {"name", f.name},
                        {"parent", f.parent ? json(*f.parent) : json(nullptr)},
                        {"variability", VariabilityName(f.variability)},
                        {"group", GroupKindName(f.group)}});
  }
  json constraints = json::array();
  for (const auto& c : model.constraints()) {
    constraints.push_back(
        {{"kind", ConstraintKindName(c.kind)}, {"from", c.from}, {"to", c.to}});
  }
  return {{"version", model.version()},
          {"features", features},
          {"constraints", constraints},
          {"blockchain_feature_map", model.blockchain_feature_map()},
          {"pattern_feature_map", model.pattern_feature_map()}};
}

std::string_view GroupKindName(GroupKind kind) {
  switch (kind) {
    case GroupKind::kNone: return "none";
    case GroupKind::kXor: return "xor";
    case GroupKind::kOr: return "or";
  }
  return "none";
}

std::string_view VariabilityName(Variability variability) {
  return variability == Variability::kMandatory ? "mandatory" : "optional";
}

std::string_view ConstraintKindName(ConstraintKind kind) {
  return kind == ConstraintKind::kRequires ? "requires" : "excludes";
}

}  // namespace harmonica::banco
