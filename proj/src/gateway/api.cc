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

#include "harmonica/gateway/api.h"

#include <stdlib.h>

#include <fstream>
#include <sstream>

#include "harmonica/banco/configuration.h"
#include "harmonica/banco/generator.h"
#include "harmonica/blade/recommend.h"
#include "harmonica/gateway/archive.h"

namespace harmonica::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <typename Fn>
ApiResponse Guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return ErrorResponse(e);
  } catch (const json::exception& e) {
    return ErrorResponse(Error(ErrorCode::kBadRequest, e.what()));
  }
}

ApiResponse Ok(json body, int exit_code = 0) {
  return {200, std::move(body), exit_code};
}

template <typename T>
json List(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& item : items) out.push_back(kb::ToJson(item));
  return out;
}

// RAII scratch directory for one generation request.
class ScratchDir {
 public:
  explicit ScratchDir(const fs::path& root) {
    fs::create_directories(root);
    std::string pattern = (root / "harmonica-gen-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      throw Error(ErrorCode::kIo, "cannot create scratch directory under " + root.string());
    }
    path_ = pattern;
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string RenderJson(const json& body) { return body.dump(2) + "\n"; }

std::string ApiResponse::Render() const { return RenderJson(body); }

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest:
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownAttribute:
    case ErrorCode::kUnknownFeature:
      return 400;
    case ErrorCode::kNotFound:
    case ErrorCode::kNotRanked:
      return 404;
    case ErrorCode::kMissingFile:
    case ErrorCode::kValidationFailed:
    case ErrorCode::kIo:
      return 500;
    default:
      return 422;
  }
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest:
    case ErrorCode::kParseError:
    case ErrorCode::kMissingFile:
    case ErrorCode::kIo:
      return 1;
    default:
      return 2;
  }
}

ApiResponse ErrorResponse(const Error& error) {
  return {HttpStatusFor(error.code()),
          {{"code", ErrorCodeName(error.code())},
           {"message", error.what()},
           {"details", error.details()}},
          ExitCodeFor(error.code())};
}

ApiResponse AttributesResponse(const kb::KnowledgeBase& kb) {
  return Ok({{"version", kb.version}, {"attributes", List(kb.attributes)}});
}

ApiResponse BlockchainsResponse(const kb::KnowledgeBase& kb) {
  return Ok({{"version", kb.version}, {"blockchains", List(kb.blockchains)}});
}

ApiResponse PatternsResponse(const kb::KnowledgeBase& kb) {
  return Ok({{"version", kb.version}, {"patterns", List(kb.patterns)}});
}

ApiResponse FeatureModelResponse(const banco::FeatureModel& model) {
  return Ok(banco::ToJson(model));
}

ApiResponse ConflictsResponse(const kb::KnowledgeBase& kb, const json& body) {
  return Guarded([&] {
    auto report = blade::CheckConflicts(blade::ProfileFromJson(body), kb);
    return Ok(blade::ToJson(report), report.HasErrors() ? 2 : 0);
  });
}

ApiResponse BlockedResponse(const kb::KnowledgeBase& kb, const json& body) {
  return Guarded([&] {
    auto profile = blade::ProfileFromJson(body);
    blade::ValidateProfile(profile, kb);
    return Ok(blade::BlockedToJson(blade::BlockedAttributes(profile, kb)));
  });
}

ApiResponse RecommendResponse(const kb::KnowledgeBase& kb, const json& body) {
  return Guarded([&] {
    auto report = blade::Recommend(blade::ProfileFromJson(body), kb);
    return Ok(blade::ToJson(report), report.conflicts.HasErrors() ? 2 : 0);
  });
}

ApiResponse ExplainResponse(const kb::KnowledgeBase& kb, const json& body) {
  return Guarded([&] {
    if (!body.is_object() || !body.contains("profile") || !body.contains("blockchain_id")) {
      throw Error(ErrorCode::kBadRequest, "expected {\"profile\", \"blockchain_id\"}");
    }
    auto report = blade::Recommend(blade::ProfileFromJson(body.at("profile")), kb);
    if (!report.ranking) {
      throw Error(ErrorCode::kMissingRanking, "profile has error-severity conflicts");
    }
    std::string id = body.at("blockchain_id").get<std::string>();
    const auto& rows = blade::Explain(*report.ranking, id);
    return Ok({{"blockchain_id", id}, {"rows", blade::ExplainToJson(rows)}});
  });
}

ApiResponse PreselectResponse(const banco::FeatureModel& model, const json& body) {
  return Guarded([&] {
    auto config = banco::PreselectFromRecommendation(blade::ReportFromJson(body), model);
    return Ok(banco::ToJson(config, model));
  });
}

ApiResponse ValidateResponse(const banco::FeatureModel& model, const json& body) {
  return Guarded([&] {
    auto report = banco::ValidateConfiguration(banco::ConfigurationFromJson(body), model);
    return Ok(banco::ToJson(report), report.status == banco::Validity::kValid ? 0 : 2);
  });
}

ApiResponse CompleteResponse(const banco::FeatureModel& model, const json& body) {
  return Guarded([&] {
    auto config = banco::CompleteConfiguration(banco::ConfigurationFromJson(body), model);
    return Ok(banco::ToJson(config, model));
  });
}

ApiResponse EnumerateResponse(const banco::FeatureModel& model, size_t limit) {
  return Guarded([&] {
    json configs = json::array();
    for (const auto& c : banco::EnumerateConfigurations(model, limit)) {
      configs.push_back(banco::ToJson(c));
    }
    return Ok({{"count", configs.size()}, {"configurations", configs}});
  });
}

ApiResponse GenerateResponse(const kb::KnowledgeBase& kb, const banco::FeatureModel& model,
                             const json& body, const fs::path& scratch_root) {
  return Guarded([&] {
    if (!body.is_object() || !body.contains("configuration")) {
      throw Error(ErrorCode::kBadRequest, "expected {\"configuration\", \"variables\"}");
    }
    for (const auto& [key, value] : body.items()) {
      if (key != "configuration" && key != "variables") {
        throw Error(ErrorCode::kBadRequest, "unknown field '" + key + "'");
      }
    }
    std::map<std::string, std::string> variables;
    if (body.contains("variables")) {
      variables = body.at("variables").get<std::map<std::string, std::string>>();
    }
    auto config = banco::ConfigurationFromJson(body.at("configuration"));

    ScratchDir scratch(scratch_root);
    auto manifest = banco::GenerateProduct(config, model, kb, scratch.path(), variables);
    std::vector<ArchiveEntry> entries;
    for (const auto& e : manifest.entries) {
      bool script = e.path.size() > 3 && e.path.compare(e.path.size() - 3, 3, ".sh") == 0;
      entries.push_back({e.path, ReadFile(scratch.path() / e.path), script});
    }
    entries.push_back({banco::kManifestFile, ReadFile(scratch.path() / banco::kManifestFile),
                       false});
    return Ok({{"manifest", banco::ToJson(manifest)},
               {"archive_format", "zip"},
               {"archive", Base64Encode(WriteZip(entries))}});
  });
}

Api::Api(std::shared_ptr<const kb::KnowledgeBase> kb,
         std::shared_ptr<const banco::FeatureModel> model, fs::path scratch_root)
    : kb_(std::move(kb)), model_(std::move(model)), scratch_root_(std::move(scratch_root)) {}

ApiResponse Api::Handle(std::string_view method, std::string_view path,
                        std::string_view body) const {
  if (method == "GET") {
    if (path == "/api/attributes") return AttributesResponse(*kb_);
    if (path == "/api/blockchains") return BlockchainsResponse(*kb_);
    if (path == "/api/patterns") return PatternsResponse(*kb_);
    if (path == "/api/feature-model") return FeatureModelResponse(*model_);
  } else if (method == "POST") {
    json parsed;
    try {
      parsed = json::parse(body);
    } catch (const json::parse_error& e) {
      return ErrorResponse(Error(ErrorCode::kBadRequest,
                                 std::string("request body is not JSON: ") + e.what()));
    }
    if (path == "/api/conflicts") return ConflictsResponse(*kb_, parsed);
    if (path == "/api/blocked") return BlockedResponse(*kb_, parsed);
    if (path == "/api/recommend") return RecommendResponse(*kb_, parsed);
    if (path == "/api/explain") return ExplainResponse(*kb_, parsed);
    if (path == "/api/preselect") return PreselectResponse(*model_, parsed);
    if (path == "/api/configure/validate") return ValidateResponse(*model_, parsed);
    if (path == "/api/configure/complete") return CompleteResponse(*model_, parsed);
    if (path == "/api/generate") return GenerateResponse(*kb_, *model_, parsed, scratch_root_);
  }
  return ErrorResponse(Error(ErrorCode::kNotFound,
                             "no route for " + std::string(method) + " " + std::string(path),
                             {{"kind", "route"}, {"id", std::string(path)}}));
}

}  // namespace harmonica::gateway
