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

#ifndef HARMONICA_BANCO_GENERATOR_H_
#define HARMONICA_BANCO_GENERATOR_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "harmonica/banco/configuration.h"
#include "harmonica/banco/feature_model.h"
#include "harmonica/kb/knowledge_base.h"
#include "json.hpp"

namespace harmonica::banco {

inline constexpr const char* kManifestFile = "manifest.json";

struct ManifestEntry {
  std::string path;  // relative, '/'-separated
  size_t bytes = 0;
  std::string sha256;  // lowercase hex
};

struct ProductManifest {
  std::vector<ManifestEntry> entries;  // sorted by path, unique
  std::string config_digest;
  std::string kb_version;
};

struct RenderedFile {
  std::string path;
  std::string content;
};

std::string Sha256Hex(std::string_view data);

// SHA-256 of the compact canonical JSON of the configuration.
std::string ConfigDigest(const Configuration& config);

// Variables every template may use in addition to caller-supplied ones:
// "kb-version" and, when a blockchain feature is selected, "blockchain" (its
// knowledge-base id) and "blockchain-name". Caller values win on a clash.
std::map<std::string, std::string> BuiltinVariables(const Configuration& config,
                                                    const FeatureModel& model,
                                                    const kb::KnowledgeBase& kb);

// Renders every asset whose activating features are all selected, in path
// order, without touching the filesystem. Throws Error(kInvalidConfiguration),
// Error(kPathCollision), Error(kPathEscape), Error(kUnknownVariable).
std::vector<RenderedFile> RenderProduct(
    const Configuration& config, const FeatureModel& model,
    const kb::KnowledgeBase& kb, const std::map<std::string, std::string>& variables);

ProductManifest BuildManifest(const std::vector<RenderedFile>& files,
                              const Configuration& config,
                              const kb::KnowledgeBase& kb);

// RenderProduct + write each file under out_dir + write manifest.json.
// Must not run concurrently on the same out_dir.
ProductManifest GenerateProduct(const Configuration& config, const FeatureModel& model,
                                const kb::KnowledgeBase& kb,
                                const std::filesystem::path& out_dir,
                                const std::map<std::string, std::string>& variables);

nlohmann::json ToJson(const ProductManifest& manifest);
ProductManifest ManifestFromJson(const nlohmann::json& j);

// Warnings for assets that can never activate under `model` because an
// activating feature does not exist in it.
kb::ValidationReport LintAssetsAgainstModel(const kb::KnowledgeBase& kb,
                                            const FeatureModel& model);

}  // namespace harmonica::banco

#endif  // HARMONICA_BANCO_GENERATOR_H_
