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

#include "harmonica/banco/generator.h"

#include <openssl/sha.h>

#include <algorithm>
#include <fstream>

#include "harmonica/banco/template.h"
#include "harmonica/error.h"

namespace harmonica::banco {

namespace fs = std::filesystem;

namespace {

bool EscapesRoot(const std::string& path) {
  if (path.empty() || path.front() == '/' || path.find('\\') != std::string::npos) {
    return true;
  }
  for (const auto& part : fs::path(path)) {
    if (part == "..") return true;
  }
  return false;
}

}  // namespace

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char byte : digest) {
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 0xF]);
  }
  return out;
}

std::string ConfigDigest(const Configuration& config) {
  return Sha256Hex(ToJson(config).dump());
}

std::map<std::string, std::string> BuiltinVariables(const Configuration& config,
                                                    const FeatureModel& model,
                                                    const kb::KnowledgeBase& kb) {
  std::map<std::string, std::string> vars{{"kb-version", kb.version}};
  for (const auto& [chain, feature] : model.blockchain_feature_map()) {
    if (config.selected.count(feature) == 0) continue;
    vars["blockchain"] = chain;
    if (const auto* descriptor = kb.FindBlockchain(chain)) {
      vars["blockchain-name"] = descriptor->name;
    }
  }
  return vars;
}

std::vector<RenderedFile> RenderProduct(
    const Configuration& config, const FeatureModel& model,
    const kb::KnowledgeBase& kb, const std::map<std::string, std::string>& variables) {
  ValidityReport validity = ValidateConfiguration(config, model);
  if (validity.status != Validity::kValid) {
    throw Error(ErrorCode::kInvalidConfiguration,
                "configuration is " + std::string(ValidityName(validity.status)) +
                    "; generation needs a complete valid configuration",
                {{"validity", ToJson(validity)}});
  }

  RenderContext context;
  context.variables = BuiltinVariables(config, model, kb);
  for (const auto& [k, v] : variables) context.variables[k] = v;
  context.selected_features = config.selected;

  std::map<std::string, std::string> owner;  // path -> asset id
  std::vector<RenderedFile> files;
  for (const auto& asset : kb.assets) {
    bool active = std::all_of(asset.activating_features.begin(),
                              asset.activating_features.end(),
                              [&](const auto& f) { return config.selected.count(f) != 0; });
    if (!active) continue;
    std::string path = RenderTemplate(asset.output_path_template, context);
    if (EscapesRoot(path)) {
      throw Error(ErrorCode::kPathEscape,
                  "asset '" + asset.id + "' renders to unsafe path '" + path + "'",
                  {{"asset", asset.id}, {"path", path}});
    }
    auto [it, inserted] = owner.emplace(path, asset.id);
    if (!inserted) {
      throw Error(ErrorCode::kPathCollision,
                  "assets '" + it->second + "' and '" + asset.id +
                      "' both render to '" + path + "'",
                  {{"path", path}, {"assets", {it->second, asset.id}}});
    }
    files.push_back({path, RenderTemplate(asset.body, context)});
  }
  std::sort(files.begin(), files.end(),
            [](const RenderedFile& a, const RenderedFile& b) { return a.path < b.path; });
  return files;
}

ProductManifest BuildManifest(const std::vector<RenderedFile>& files,
                              const Configuration& config,
                              const kb::KnowledgeBase& kb) {
  ProductManifest manifest;
  for (const auto& file : files) {
    manifest.entries.push_back({file.path, file.content.size(), Sha256Hex(file.content)});
  }
  manifest.config_digest = ConfigDigest(config);
  manifest.kb_version = kb.version;
  return manifest;
}

ProductManifest GenerateProduct(const Configuration& config, const FeatureModel& model,
                                const kb::KnowledgeBase& kb, const fs::path& out_dir,
                                const std::map<std::string, std::string>& variables) {
  std::vector<RenderedFile> files = RenderProduct(config, model, kb, variables);
  ProductManifest manifest = BuildManifest(files, config, kb);

  auto write = [](const fs::path& path, const std::string& content) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'",
                  {{"path", path.string()}});
    }
  };
  for (const auto& file : files) write(out_dir / file.path, file.content);
  write(out_dir / kManifestFile, ToJson(manifest).dump(2) + "\n");
  return manifest;
}

nlohmann::json ToJson(const ProductManifest& manifest) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : manifest.entries) {
    entries.push_back({{"path", e.path}, {"bytes", e.bytes}, {"sha256", e.sha256}});
  }
  return {{"entries", entries},
          {"config_digest", manifest.config_digest},
          {"kb_version", manifest.kb_version}};
}

ProductManifest ManifestFromJson(const nlohmann::json& j) {
  try {
    ProductManifest manifest;
    for (const auto& e : j.at("entries")) {
      manifest.entries.push_back({e.at("path").get<std::string>(),
                                  e.at("bytes").get<size_t>(),
                                  e.at("sha256").get<std::string>()});
    }
    manifest.config_digest = j.at("config_digest").get<std::string>();
    manifest.kb_version = j.at("kb_version").get<std::string>();
    return manifest;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadRequest, std::string("malformed manifest: ") + e.what());
  }
}

kb::ValidationReport LintAssetsAgainstModel(const kb::KnowledgeBase& kb,
                                            const FeatureModel& model) {
  kb::ValidationReport report;
  for (const auto& asset : kb.assets) {
    for (const auto& feature : asset.activating_features) {
      if (model.Find(feature) == nullptr) {
        report.issues.push_back(
            {kb::Severity::kWarning, std::string(kb::kAssetsFile) + ":" + asset.id,
             "unused core asset '" + asset.id + "': activating feature '" + feature +
                 "' is not in the feature model"});
      }
    }
  }
  return report;
}

}  // namespace harmonica::banco
