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

#include "harmonica/kb/knowledge_base.h"

#include <algorithm>

#include "harmonica/error.h"

namespace harmonica::kb {

namespace {

template <typename T>
const T* FindById(const std::vector<T>& items, std::string_view id) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const T& item) { return item.id == id; });
  return it == items.end() ? nullptr : &*it;
}

[[noreturn]] void ThrowNotFound(EntityKind kind, std::string_view id) {
  throw Error(ErrorCode::kNotFound,
              std::string(EntityKindName(kind)) + " '" + std::string(id) +
                  "' not found",
              {{"kind", EntityKindName(kind)}, {"id", id}});
}

template <typename T>
const T& GetOrThrow(const std::vector<T>& items, EntityKind kind,
                    std::string_view id) {
  const T* found = FindById(items, id);
  if (found == nullptr) ThrowNotFound(kind, id);
  return *found;
}

}  // namespace

const AttributeDefinition& KnowledgeBase::attribute(std::string_view id) const {
  return GetOrThrow(attributes, EntityKind::kAttribute, id);
}
const BlockchainDescriptor& KnowledgeBase::blockchain(
    std::string_view id) const {
  return GetOrThrow(blockchains, EntityKind::kBlockchain, id);
}
const PatternDescriptor& KnowledgeBase::pattern(std::string_view id) const {
  return GetOrThrow(patterns, EntityKind::kPattern, id);
}
const CoreAsset& KnowledgeBase::asset(std::string_view id) const {
  return GetOrThrow(assets, EntityKind::kAsset, id);
}

const AttributeDefinition* KnowledgeBase::FindAttribute(
    std::string_view id) const {
  return FindById(attributes, id);
}
const BlockchainDescriptor* KnowledgeBase::FindBlockchain(
    std::string_view id) const {
  return FindById(blockchains, id);
}
const PatternDescriptor* KnowledgeBase::FindPattern(std::string_view id) const {
  return FindById(patterns, id);
}

EntityRef Lookup(const KnowledgeBase& kb, EntityKind kind,
                 std::string_view id) {
  switch (kind) {
    case EntityKind::kAttribute: return &kb.attribute(id);
    case EntityKind::kBlockchain: return &kb.blockchain(id);
    case EntityKind::kPattern: return &kb.pattern(id);
    case EntityKind::kAsset: return &kb.asset(id);
  }
  ThrowNotFound(kind, id);
}

std::string_view EntityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kAttribute: return "attribute";
    case EntityKind::kBlockchain: return "blockchain";
    case EntityKind::kPattern: return "pattern";
    case EntityKind::kAsset: return "asset";
  }
  return "unknown";
}

std::optional<EntityKind> ParseEntityKind(std::string_view name) {
  for (auto kind : {EntityKind::kAttribute, EntityKind::kBlockchain,
                    EntityKind::kPattern, EntityKind::kAsset}) {
    if (EntityKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view DirectionName(Direction direction) {
  return direction == Direction::kBenefit ? "benefit" : "cost";
}

std::string_view GovernanceName(Governance governance) {
  switch (governance) {
    case Governance::kPublic: return "public";
    case Governance::kPrivate: return "private";
    case Governance::kConsortium: return "consortium";
  }
  return "public";
}

std::string_view AssetKindName(AssetKind kind) {
  switch (kind) {
    case AssetKind::kContractTemplate: return "contract-template";
    case AssetKind::kOffchainTemplate: return "offchain-template";
    case AssetKind::kNetworkConfigTemplate: return "network-config-template";
    case AssetKind::kBootstrapScriptTemplate:
      return "bootstrap-script-template";
  }
  return "contract-template";
}

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

}  // namespace harmonica::kb
