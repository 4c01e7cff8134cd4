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

#ifndef HARMONICA_KB_KNOWLEDGE_BASE_H_
#define HARMONICA_KB_KNOWLEDGE_BASE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "harmonica/kb/preference_level.h"
#include "json.hpp"

namespace harmonica::kb {

enum class Direction { kBenefit, kCost };

enum class Governance { kPublic, kPrivate, kConsortium };

enum class AssetKind {
  kContractTemplate,
  kOffchainTemplate,
  kNetworkConfigTemplate,
  kBootstrapScriptTemplate,
};

inline constexpr int kScaleMin = 1;
inline constexpr int kScaleMax = 5;

struct AttributeDefinition {
  std::string id;
  std::string name;
  std::string description;
  Direction direction = Direction::kBenefit;
  int scale_min = kScaleMin;
  int scale_max = kScaleMax;
};

struct BlockchainDescriptor {
  std::string id;
  std::string name;
  Governance governance = Governance::kPublic;
  std::map<std::string, int> scores;  // attribute id -> ordinal level
  std::set<std::string> capabilities;

  bool HasCapability(std::string_view tag) const {
    return capabilities.find(std::string(tag)) != capabilities.end();
  }
};

struct PatternDescriptor {
  std::string id;
  std::string name;
  std::string category;
  std::string intent;
  std::set<std::string> addresses;
  std::set<std::string> requires_capabilities;
  std::set<std::string> conflicts_with;
  std::optional<std::string> variant_of;
};

struct ConflictRule {
  std::string left;
  std::string right;
  PreferenceLevel threshold = PreferenceLevel::kHighlyDesirable;
  std::string explanation;
};

struct CoreAsset {
  std::string id;
  AssetKind kind = AssetKind::kContractTemplate;
  std::set<std::string> activating_features;
  std::string output_path_template;
  std::string body;
  // Set when the body was loaded from a sibling file; kept so that
  // serialization reproduces the on-disk document.
  std::optional<std::string> body_file;
};

struct KnowledgeBase {
  std::string version;
  std::vector<AttributeDefinition> attributes;
  std::vector<BlockchainDescriptor> blockchains;
  std::vector<PatternDescriptor> patterns;
  std::vector<ConflictRule> conflict_rules;
  std::vector<CoreAsset> assets;

  // Exact-id accessors; throw Error(kNotFound) on a miss.
  const AttributeDefinition& attribute(std::string_view id) const;
  const BlockchainDescriptor& blockchain(std::string_view id) const;
  const PatternDescriptor& pattern(std::string_view id) const;
  const CoreAsset& asset(std::string_view id) const;

  const AttributeDefinition* FindAttribute(std::string_view id) const;
  const BlockchainDescriptor* FindBlockchain(std::string_view id) const;
  const PatternDescriptor* FindPattern(std::string_view id) const;
};

enum class EntityKind { kAttribute, kBlockchain, kPattern, kAsset };

using EntityRef =
    std::variant<const AttributeDefinition*, const BlockchainDescriptor*,
                 const PatternDescriptor*, const CoreAsset*>;

// Generic lookup by kind; throws Error(kNotFound) with {kind, id} details.
EntityRef Lookup(const KnowledgeBase& kb, EntityKind kind, std::string_view id);

std::string_view EntityKindName(EntityKind kind);
std::optional<EntityKind> ParseEntityKind(std::string_view name);

// ---- Validation ----------------------------------------------------------

enum class Severity { kError, kWarning };

struct ValidationIssue {
  Severity severity = Severity::kError;
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  size_t ErrorCount() const;
  size_t WarningCount() const;
  bool ok() const { return ErrorCount() == 0; }
};

// Checks every type invariant. One-directional conflicts_with links are
// reported as warnings; SymmetrizePatternConflicts() repairs them.
ValidationReport ValidateKnowledgeBase(const KnowledgeBase& kb);

void SymmetrizePatternConflicts(KnowledgeBase& kb);

bool IsKebabId(std::string_view id);

// ---- Persistence ---------------------------------------------------------

inline constexpr const char* kAttributesFile = "attributes.json";
inline constexpr const char* kBlockchainsFile = "blockchains.json";
inline constexpr const char* kPatternsFile = "patterns.json";
inline constexpr const char* kConflictRulesFile = "conflict_rules.json";
inline constexpr const char* kAssetsFile = "assets.json";

// Parses the five documents strictly (unknown fields are errors). Does not
// validate; see LoadKnowledgeBase().
KnowledgeBase ParseKnowledgeBase(const std::filesystem::path& root);

// Parse + validate + symmetrize. Throws Error(kValidationFailed) with the
// report under details["report"] when the linter finds errors.
KnowledgeBase LoadKnowledgeBase(const std::filesystem::path& root);

// Document form of each file, keyed by file name.
std::map<std::string, nlohmann::json> SerializeKnowledgeBase(
    const KnowledgeBase& kb);

nlohmann::json ToJson(const ValidationReport& report);
nlohmann::json ToJson(const AttributeDefinition& attribute);
nlohmann::json ToJson(const BlockchainDescriptor& blockchain);
nlohmann::json ToJson(const PatternDescriptor& pattern);
nlohmann::json ToJson(const ConflictRule& rule);
nlohmann::json ToJson(const CoreAsset& asset);

std::string_view DirectionName(Direction direction);
std::string_view GovernanceName(Governance governance);
std::string_view AssetKindName(AssetKind kind);
std::string_view SeverityName(Severity severity);

}  // namespace harmonica::kb

#endif  // HARMONICA_KB_KNOWLEDGE_BASE_H_
