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

#ifndef HARMONICA_GATEWAY_API_H_
#define HARMONICA_GATEWAY_API_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "harmonica/banco/feature_model.h"
#include "harmonica/error.h"
#include "harmonica/kb/knowledge_base.h"
#include "json.hpp"

namespace harmonica::gateway {

// One operation's outcome, shared verbatim by the HTTP service and the CLI's
// --json mode so the two can never drift apart.
struct ApiResponse {
  int status = 200;
  nlohmann::json body;
  int exit_code = 0;

  std::string Render() const;
};

// Canonical JSON text for every response body: sorted keys, two-space
// indent, trailing newline.
std::string RenderJson(const nlohmann::json& body);

int HttpStatusFor(ErrorCode code);
// 1 for usage/IO failures, 2 for domain errors.
int ExitCodeFor(ErrorCode code);
ApiResponse ErrorResponse(const Error& error);

ApiResponse AttributesResponse(const kb::KnowledgeBase& kb);
ApiResponse BlockchainsResponse(const kb::KnowledgeBase& kb);
ApiResponse PatternsResponse(const kb::KnowledgeBase& kb);
ApiResponse FeatureModelResponse(const banco::FeatureModel& model);

// Body: a profile document.
ApiResponse ConflictsResponse(const kb::KnowledgeBase& kb, const nlohmann::json& body);
ApiResponse BlockedResponse(const kb::KnowledgeBase& kb, const nlohmann::json& body);
ApiResponse RecommendResponse(const kb::KnowledgeBase& kb, const nlohmann::json& body);
// Body: {"profile": <profile>, "blockchain_id": "<id>"}.
ApiResponse ExplainResponse(const kb::KnowledgeBase& kb, const nlohmann::json& body);
// Body: a recommendation report.
ApiResponse PreselectResponse(const banco::FeatureModel& model, const nlohmann::json& body);
// Body: a configuration.
ApiResponse ValidateResponse(const banco::FeatureModel& model, const nlohmann::json& body);
ApiResponse CompleteResponse(const banco::FeatureModel& model, const nlohmann::json& body);
ApiResponse EnumerateResponse(const banco::FeatureModel& model, size_t limit);
// Body: {"configuration": <configuration>, "variables": {"k": "v"}}.
// Generates into a fresh directory below `scratch_root`, answers with the
// manifest plus a base64 zip of the files, and removes the directory.
ApiResponse GenerateResponse(const kb::KnowledgeBase& kb, const banco::FeatureModel& model,
                             const nlohmann::json& body,
                             const std::filesystem::path& scratch_root);

// Read-only routing table over a loaded knowledge base and feature model.
class Api {
 public:
  Api(std::shared_ptr<const kb::KnowledgeBase> kb,
      std::shared_ptr<const banco::FeatureModel> model,
      std::filesystem::path scratch_root = std::filesystem::temp_directory_path());

  // `path` excludes the /api prefix handling; pass the full request path.
  ApiResponse Handle(std::string_view method, std::string_view path,
                     std::string_view body) const;

  const kb::KnowledgeBase& kb() const { return *kb_; }
  const banco::FeatureModel& model() const { return *model_; }

 private:
  std::shared_ptr<const kb::KnowledgeBase> kb_;
  std::shared_ptr<const banco::FeatureModel> model_;
  std::filesystem::path scratch_root_;
};

}  // namespace harmonica::gateway

#endif  // HARMONICA_GATEWAY_API_H_
