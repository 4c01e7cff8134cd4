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

#include "gtest/gtest.h"
#include "harmonica/banco/generator.h"
#include "harmonica/gateway/api.h"
#include "harmonica/gateway/archive.h"
#include "harmonica/gateway/server.h"
#include "json_schema.h"
#include "test_env.h"

namespace harmonica::gateway {
namespace {

using nlohmann::json;

const Api& TheApi() {
  static const auto api = LoadApi(testing::KbDir(), testing::ModelFile());
  return *api;
}

const testing::SchemaSet& Schemas() {
  static const testing::SchemaSet schemas(testing::SchemasDir());
  return schemas;
}

ApiResponse Post(const std::string& path, const json& body) {
  return TheApi().Handle("POST", "/api" + path, body.dump());
}

json Profile() { return json::parse(testing::ReadText(testing::ProfileFile())); }
json GoldenConfig() { return json::parse(testing::ReadText(testing::GoldenConfigFile())); }

void ExpectSchema(const std::string& schema, const json& body) {
  auto errors = Schemas().Validate(schema, body);
  EXPECT_TRUE(errors.empty()) << schema << ":\n" << json(errors).dump(2);
}

TEST(ApiTest, EveryErrorCodeHasStatusAndExitCode) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::kBadRequest); ++i) {
    auto code = static_cast<ErrorCode>(i);
    int status = HttpStatusFor(code);
    EXPECT_TRUE(status == 400 || status == 404 || status == 422 || status == 500);
    int exit_code = ExitCodeFor(code);
    EXPECT_TRUE(exit_code == 1 || exit_code == 2);
    auto r = ErrorResponse(Error(code, "m"));
    EXPECT_EQ(r.body.at("code"), std::string(ErrorCodeName(code)));
    ExpectSchema("api_error.schema.json", r.body);
  }
}

TEST(ApiTest, AttributesListsFourteen) {
  auto r = TheApi().Handle("GET", "/api/attributes", "");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("attributes").size(), 14u);
  ExpectSchema("attributes_response.schema.json", r.body);
}

TEST(ApiTest, CatalogEndpointsMatchSchemas) {
  ExpectSchema("blockchains_response.schema.json",
               TheApi().Handle("GET", "/api/blockchains", "").body);
  ExpectSchema("patterns_response.schema.json", TheApi().Handle("GET", "/api/patterns", "").body);
  ExpectSchema("feature_model.schema.json",
               TheApi().Handle("GET", "/api/feature-model", "").body);
}

TEST(ApiTest, EmptyProfileIsNoActiveCriteria) {
  auto r = Post("/recommend", {{"requirements", json::object()}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body.at("code"), "no-active-criteria");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(Post("/recommend", json::object()).body.at("code"), "bad-request");
}

TEST(ApiTest, ConflictsImmutabilityModifiability) {
  json profile = {{"requirements",
                   {{"immutability", {{"level", "extremely-desirable"}}},
                    {"modifiability", {{"level", "highly-desirable"}}}}}};
  auto r = Post("/conflicts", profile);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("violations").size(), 1u);
  ExpectSchema("conflict_report.schema.json", r.body);
}

TEST(ApiTest, RecommendWithErrorConflictIs200WithExit2) {
  json profile = {{"requirements",
                   {{"immutability", {{"required", true}, {"min_level", 4}}},
                    {"modifiability", {{"level", "extremely-desirable"}}}}}};
  auto r = Post("/recommend", profile);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.body.at("ranking").is_null());
  ExpectSchema("recommendation_report.schema.json", r.body);
}

TEST(ApiTest, MalformedRequests) {
  auto r = TheApi().Handle("POST", "/api/recommend", "{not json");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body.at("code"), "bad-request");
  EXPECT_EQ(Post("/recommend", json::parse(R"({"requirements": {"speed": {}}})")).status, 400);
  EXPECT_EQ(Post("/configure/validate", json::parse(R"({"selected": ["ghost"]})")).body.at("code"),
            "unknown-feature");
  EXPECT_EQ(TheApi().Handle("GET", "/api/nothing", "").status, 404);
  EXPECT_EQ(TheApi().Handle("DELETE", "/api/attributes", "").status, 404);
}

TEST(ApiTest, FullFlowMatchesSchemas) {
  auto report = Post("/recommend", Profile());
  ASSERT_EQ(report.status, 200);
  ExpectSchema("recommendation_report.schema.json", report.body);
  ExpectSchema("profile.schema.json", Profile());

  auto blocked = Post("/blocked", Profile());
  ASSERT_EQ(blocked.status, 200);
  ExpectSchema("blocked_response.schema.json", blocked.body);

  json explain_request = {{"profile", Profile()}, {"blockchain_id", "chain-d"}};
  ExpectSchema("explain_request.schema.json", explain_request);
  auto explain = Post("/explain", explain_request);
  ASSERT_EQ(explain.status, 200);
  ExpectSchema("explain_response.schema.json", explain.body);

  auto pre = Post("/preselect", report.body);
  ASSERT_EQ(pre.status, 200);
  ExpectSchema("configuration_view.schema.json", pre.body);

  auto completed = Post("/configure/complete", pre.body);
  ASSERT_EQ(completed.status, 200);
  ExpectSchema("configuration_view.schema.json", completed.body);

  auto validity = Post("/configure/validate", completed.body);
  EXPECT_EQ(validity.body.at("status"), "incomplete");
  EXPECT_EQ(validity.exit_code, 2);
  ExpectSchema("validity_report.schema.json", validity.body);
}

TEST(ApiTest, ExplainUnrankedChain) {
  auto r = Post("/explain", {{"profile", Profile()}, {"blockchain_id", "chain-a"}});
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(r.body.at("code"), "not-ranked");
}

TEST(ApiTest, GenerateReturnsManifestAndArchive) {
  json request = {{"configuration", GoldenConfig()}, {"variables", {{"project", "demo"}}}};
  ExpectSchema("generate_request.schema.json", request);
  auto r = Post("/generate", request);
  ASSERT_EQ(r.status, 200) << r.Render();
  ExpectSchema("generate_response.schema.json", r.body);
  EXPECT_EQ(r.Render(), Post("/generate", request).Render());

  auto entries = ReadZip(Base64Decode(r.body.at("archive").get<std::string>()));
  const auto& manifest = r.body.at("manifest");
  ASSERT_EQ(entries.size(), manifest.at("entries").size() + 1);
  for (size_t i = 0; i < manifest.at("entries").size(); ++i) {
    const auto& e = manifest.at("entries")[i];
    EXPECT_EQ(entries[i].path, e.at("path"));
    EXPECT_EQ(banco::Sha256Hex(entries[i].content), e.at("sha256"));
    EXPECT_EQ(entries[i].executable, entries[i].path == "scripts/bootstrap-network.sh");
  }
  EXPECT_EQ(entries.back().path, banco::kManifestFile);
  EXPECT_EQ(entries.back().content, RenderJson(manifest));
}

TEST(ApiTest, GenerateRejectsIncompleteConfiguration) {
  auto r = Post("/generate", {{"configuration", {{"selected", {"bc-chain-c"}}}},
                              {"variables", {{"project", "demo"}}}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body.at("code"), "invalid-configuration");
  EXPECT_EQ(Post("/generate", {{"config", GoldenConfig()}}).status, 400);
}

TEST(ApiTest, LoadApiRefusesInvalidKnowledgeBase) {
  testing::TempDir dir;
  std::filesystem::copy(testing::KbDir(), dir.path(), std::filesystem::copy_options::recursive);
  auto docs = kb::SerializeKnowledgeBase(kb::LoadKnowledgeBase(testing::KbDir()));
  docs[kb::kBlockchainsFile]["blockchains"][0]["scores"]["latency"] = 9;
  testing::WriteText(dir.path() / kb::kBlockchainsFile, docs[kb::kBlockchainsFile].dump());
  try {
    LoadApi(dir.path(), testing::ModelFile());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationFailed);
  }
}

}  // namespace
}  // namespace harmonica::gateway
