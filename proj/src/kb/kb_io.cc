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

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "harmonica/error.h"
#include "harmonica/kb/knowledge_base.h"

namespace harmonica::kb {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

size_t LineOfOffset(const std::string& text, size_t offset) {
  size_t line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

// A parsed document plus enough of its source text to point errors at a line.
class Document {
 public:
  Document(std::string file, std::string text)
      : file_(std::move(file)), text_(std::move(text)) {
    try {
      root_ = json::parse(text_);
    } catch (const json::parse_error& e) {
      Fail(LineOfOffset(text_, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
  }

  const json& root() const { return root_; }

  [[noreturn]] void Fail(size_t line, const std::string& message) const {
    throw Error(ErrorCode::kParseError,
                file_ + ":" + std::to_string(line) + ": " + message,
                {{"file", file_}, {"line", line}, {"message", message}});
  }

  // Errors about a field are pinned to the first line mentioning it.
  [[noreturn]] void FailAt(const std::string& key,
                           const std::string& message) const {
    size_t pos = text_.find("\"" + key + "\"");
    Fail(pos == std::string::npos ? 0 : LineOfOffset(text_, pos), message);
  }

  void ExpectObject(const json& j, const std::string& what) const {
    if (!j.is_object()) FailAt(what, what + " must be an object");
  }

  void Strict(const json& obj, std::initializer_list<const char*> allowed,
              const std::string& what) const {
    ExpectObject(obj, what);
    for (const auto& [key, value] : obj.items()) {
      bool known = false;
      for (const char* a : allowed) known |= key == a;
      if (!known) FailAt(key, "unknown field '" + key + "' in " + what);
    }
  }

  const json& Field(const json& obj, const char* key,
                    const std::string& what) const {
    auto it = obj.find(key);
    if (it == obj.end()) {
      FailAt(what, "missing field '" + std::string(key) + "' in " + what);
    }
    return *it;
  }

  std::string String(const json& obj, const char* key,
                     const std::string& what) const {
    const json& v = Field(obj, key, what);
    if (!v.is_string()) FailAt(key, "field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
  }

  int Integer(const json& obj, const char* key, const std::string& what) const {
    const json& v = Field(obj, key, what);
    if (!v.is_number_integer()) {
      FailAt(key, "field '" + std::string(key) + "' must be an integer");
    }
    return v.get<int>();
  }

  std::set<std::string> StringSet(const json& obj, const char* key,
                                  const std::string& what) const {
    const json& v = Field(obj, key, what);
    if (!v.is_array()) FailAt(key, "field '" + std::string(key) + "' must be an array");
    std::set<std::string> out;
    for (const auto& item : v) {
      if (!item.is_string()) {
        FailAt(key, "field '" + std::string(key) + "' must hold strings");
      }
      out.insert(item.get<std::string>());
    }
    return out;
  }

  const json& Array(const json& obj, const char* key) const {
    const json& v = Field(obj, key, file_);
    if (!v.is_array()) FailAt(key, "field '" + std::string(key) + "' must be an array");
    return v;
  }

  template <typename Enum>
  Enum Choice(const json& obj, const char* key, const std::string& what,
              std::initializer_list<std::pair<const char*, Enum>> options) const {
    std::string value = String(obj, key, what);
    for (const auto& [name, e] : options) {
      if (value == name) return e;
    }
    FailAt(key, "invalid value '" + value + "' for field '" + key + "'");
  }

 private:
  std::string file_;
  std::string text_;
  json root_;
};

Document ReadDocument(const fs::path& root, const char* name) {
  fs::path path = root / name;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::string stem = fs::path(name).stem().string();
    throw Error(ErrorCode::kMissingFile, "missing knowledge-base file '" + stem + "'",
                {{"name", stem}, {"path", path.string()}});
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Document(name, buffer.str());
}

std::string Version(const Document& doc, const char* list_key) {
  doc.Strict(doc.root(), {"version", list_key}, "document");
  return doc.String(doc.root(), "version", "document");
}

std::string ItemName(const json& item, size_t index) {
  auto it = item.find("id");
  if (it != item.end() && it->is_string()) return it->get<std::string>();
  return "item[" + std::to_string(index) + "]";
}

std::vector<AttributeDefinition> ParseAttributes(const Document& doc) {
  std::vector<AttributeDefinition> out;
  const json& items = doc.Array(doc.root(), "attributes");
  for (size_t i = 0; i < items.size(); ++i) {
    const json& j = items[i];
    std::string what = "attribute " + ItemName(j, i);
    doc.Strict(j, {"id", "name", "description", "direction", "scale_min", "scale_max"},
               what);
    AttributeDefinition a;
    a.id = doc.String(j, "id", what);
    a.name = doc.String(j, "name", what);
    a.description = doc.String(j, "description", what);
    a.direction = doc.Choice<Direction>(
        j, "direction", what,
        {{"benefit", Direction::kBenefit}, {"cost", Direction::kCost}});
    a.scale_min = doc.Integer(j, "scale_min", what);
    a.scale_max = doc.Integer(j, "scale_max", what);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<BlockchainDescriptor> ParseBlockchains(const Document& doc) {
  std::vector<BlockchainDescriptor> out;
  const json& items = doc.Array(doc.root(), "blockchains");
  for (size_t i = 0; i < items.size(); ++i) {
    const json& j = items[i];
    std::string what = "blockchain " + ItemName(j, i);
    doc.Strict(j, {"id", "name", "governance", "scores", "capabilities"}, what);
    BlockchainDescriptor b;
    b.id = doc.String(j, "id", what);
    b.name = doc.String(j, "name", what);
    b.governance = doc.Choice<Governance>(j, "governance", what,
                                          {{"public", Governance::kPublic},
                                           {"private", Governance::kPrivate},
                                           {"consortium", Governance::kConsortium}});
    const json& scores = doc.Field(j, "scores", what);
    doc.ExpectObject(scores, "scores");
    for (const auto& [attr, value] : scores.items()) {
      if (!value.is_number_integer()) {
        doc.FailAt(attr, "score for '" + attr + "' must be an integer");
      }
      b.scores[attr] = value.get<int>();
    }
    b.capabilities = doc.StringSet(j, "capabilities", what);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<PatternDescriptor> ParsePatterns(const Document& doc) {
  std::vector<PatternDescriptor> out;
  const json& items = doc.Array(doc.root(), "patterns");
  for (size_t i = 0; i < items.size(); ++i) {
    const json& j = items[i];
    std::string what = "pattern " + ItemName(j, i);
    doc.Strict(j,
               {"id", "name", "category", "intent", "addresses",
                "requires_capabilities", "conflicts_with", "variant_of"},
               what);
    PatternDescriptor p;
    p.id = doc.String(j, "id", what);
    p.name = doc.String(j, "name", what);
    p.category = doc.String(j, "category", what);
    p.intent = doc.String(j, "intent", what);
    p.addresses = doc.StringSet(j, "addresses", what);
    p.requires_capabilities = doc.StringSet(j, "requires_capabilities", what);
    p.conflicts_with = doc.StringSet(j, "conflicts_with", what);
    if (j.contains("variant_of") && !j["variant_of"].is_null()) {
      p.variant_of = doc.String(j, "variant_of", what);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ConflictRule> ParseConflictRules(const Document& doc) {
  std::vector<ConflictRule> out;
  const json& items = doc.Array(doc.root(), "rules");
  for (size_t i = 0; i < items.size(); ++i) {
    const json& j = items[i];
    std::string what = "rule[" + std::to_string(i) + "]";
    doc.Strict(j, {"left", "right", "threshold", "explanation"}, what);
    ConflictRule rule;
    rule.left = doc.String(j, "left", what);
    rule.right = doc.String(j, "right", what);
    std::string label = doc.String(j, "threshold", what);
    auto level = ParsePreferenceLevel(label);
    if (!level) doc.FailAt("threshold", "unknown preference level '" + label + "'");
    rule.threshold = *level;
    rule.explanation = doc.String(j, "explanation", what);
    out.push_back(std::move(rule));
  }
  return out;
}

std::vector<CoreAsset> ParseAssets(const Document& doc, const fs::path& root) {
  std::vector<CoreAsset> out;
  const json& items = doc.Array(doc.root(), "assets");
  for (size_t i = 0; i < items.size(); ++i) {
    const json& j = items[i];
    std::string what = "asset " + ItemName(j, i);
    doc.Strict(j,
               {"id", "kind", "activating_features", "output_path_template",
                "body", "body_file"},
               what);
    CoreAsset a;
    a.id = doc.String(j, "id", what);
    a.kind = doc.Choice<AssetKind>(
        j, "kind", what,
        {{"contract-template", AssetKind::kContractTemplate},
         {"offchain-template", AssetKind::kOffchainTemplate},
         {"network-config-template", AssetKind::kNetworkConfigTemplate},
         {"bootstrap-script-template", AssetKind::kBootstrapScriptTemplate}});
    a.activating_features = doc.StringSet(j, "activating_features", what);
    a.output_path_template = doc.String(j, "output_path_template", what);
    bool inline_body = j.contains("body");
    bool file_body = j.contains("body_file");
    if (inline_body == file_body) {
      doc.FailAt(a.id, what + " needs exactly one of 'body' or 'body_file'");
    }
    if (inline_body) {
      a.body = doc.String(j, "body", what);
    } else {
      a.body_file = doc.String(j, "body_file", what);
      fs::path body_path = root / *a.body_file;
      std::ifstream in(body_path, std::ios::binary);
      if (!in) {
        throw Error(ErrorCode::kMissingFile,
                    "missing asset body file '" + *a.body_file + "'",
                    {{"name", *a.body_file}, {"path", body_path.string()}});
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      a.body = buffer.str();
    }
    out.push_back(std::move(a));
  }
  return out;
}

json VersionedDocument(const std::string& version, const char* key, json items) {
  return {{"version", version}, {key, std::move(items)}};
}

}  // namespace

KnowledgeBase ParseKnowledgeBase(const fs::path& root) {
  // Read all five first so a missing file wins over a parse error elsewhere,
  // in catalog order.
  Document attributes = ReadDocument(root, kAttributesFile);
  Document blockchains = ReadDocument(root, kBlockchainsFile);
  Document patterns = ReadDocument(root, kPatternsFile);
  Document rules = ReadDocument(root, kConflictRulesFile);
  Document assets = ReadDocument(root, kAssetsFile);

  KnowledgeBase kb;
  kb.version = Version(attributes, "attributes");
  for (const auto* doc : {&blockchains, &patterns, &rules, &assets}) {
    const char* key = doc == &blockchains ? "blockchains"
                      : doc == &patterns  ? "patterns"
                      : doc == &rules     ? "rules"
                                          : "assets";
    std::string v = Version(*doc, key);
    if (v != kb.version) {
      doc->FailAt("version", "version '" + v + "' does not match attributes.json version '" +
                                 kb.version + "'");
    }
  }
  kb.attributes = ParseAttributes(attributes);
  kb.blockchains = ParseBlockchains(blockchains);
  kb.patterns = ParsePatterns(patterns);
  kb.conflict_rules = ParseConflictRules(rules);
  kb.assets = ParseAssets(assets, root);
  return kb;
}

KnowledgeBase LoadKnowledgeBase(const fs::path& root) {
  KnowledgeBase kb = ParseKnowledgeBase(root);
  ValidationReport report = ValidateKnowledgeBase(kb);
  if (!report.ok()) {
    std::string first;
    for (const auto& issue : report.issues) {
      if (issue.severity == Severity::kError) {
        first = issue.message;
        break;
      }
    }
    throw Error(ErrorCode::kValidationFailed,
                "knowledge base validation failed: " + first,
                {{"report", ToJson(report)}});
  }
  SymmetrizePatternConflicts(kb);
  return kb;
}

json ToJson(const AttributeDefinition& a) {
  return {{"id", a.id},
          {"name", a.name},
          {"description", a.description},
          {"direction", DirectionName(a.direction)},
          {"scale_min", a.scale_min},
          {"scale_max", a.scale_max}};
}

json ToJson(const BlockchainDescriptor& b) {
  return {{"id", b.id},
          {"name", b.name},
          {"governance", GovernanceName(b.governance)},
          {"scores", b.scores},
          {"capabilities", b.capabilities}};
}

json ToJson(const PatternDescriptor& p) {
  json j = {{"id", p.id},
            {"name", p.name},
            {"category", p.category},
            {"intent", p.intent},
            {"addresses", p.addresses},
            {"requires_capabilities", p.requires_capabilities},
            {"conflicts_with", p.conflicts_with}};
  if (p.variant_of) j["variant_of"] = *p.variant_of;
  return j;
}

json ToJson(const ConflictRule& rule) {
  return {{"left", rule.left},
          {"right", rule.right},
          {"threshold", PreferenceLevelLabel(rule.threshold)},
          {"explanation", rule.explanation}};
}

json ToJson(const CoreAsset& a) {
  json j = {{"id", a.id},
            {"kind", AssetKindName(a.kind)},
            {"activating_features", a.activating_features},
            {"output_path_template", a.output_path_template}};
  if (a.body_file) {
    j["body_file"] = *a.body_file;
  } else {
    j["body"] = a.body;
  }
  return j;
}

std::map<std::string, json> SerializeKnowledgeBase(const KnowledgeBase& kb) {
  auto list = [](const auto& items) {
    json out = json::array();
    for (const auto& item : items) out.push_back(ToJson(item));
    return out;
  };
  return {
      {kAttributesFile, VersionedDocument(kb.version, "attributes", list(kb.attributes))},
      {kBlockchainsFile, VersionedDocument(kb.version, "blockchains", list(kb.blockchains))},
      {kPatternsFile, VersionedDocument(kb.version, "patterns", list(kb.patterns))},
      {kConflictRulesFile, VersionedDocument(kb.version, "rules", list(kb.conflict_rules))},
      {kAssetsFile, VersionedDocument(kb.version, "assets", list(kb.assets))},
  };
}

}  // namespace harmonica::kb
