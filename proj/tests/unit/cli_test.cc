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

#include <sstream>

#include "gtest/gtest.h"
#include "harmonica/gateway/api.h"
#include "harmonica/gateway/cli.h"
#include "harmonica/gateway/server.h"
#include "test_env.h"

namespace harmonica::gateway {
namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Kb() { return testing::KbDir().string(); }
std::string Model() { return testing::ModelFile().string(); }
std::string Profile() { return testing::ProfileFile().string(); }

const Api& TheApi() {
  static const auto api = LoadApi(testing::KbDir(), testing::ModelFile());
  return *api;
}

TEST(CliTest, LintFixtureExitsZero) {
  auto r = Cli({"kb", "lint", Kb()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  auto j = Cli({"kb", "lint", Kb(), "--model", Model(), "--json"});
  EXPECT_EQ(json::parse(j.out).at("errors"), 0);
}

TEST(CliTest, LintBrokenKnowledgeBaseExitsOne) {
  testing::TempDir dir;
  std::filesystem::copy(testing::KbDir(), dir.path(), std::filesystem::copy_options::recursive);
  auto docs = kb::SerializeKnowledgeBase(kb::LoadKnowledgeBase(testing::KbDir()));
  docs[kb::kPatternsFile]["patterns"][0]["addresses"].push_back("speed");
  testing::WriteText(dir.path() / kb::kPatternsFile, docs[kb::kPatternsFile].dump());
  auto r = Cli({"kb", "lint", dir.path().string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("speed"), std::string::npos);
}

TEST(CliTest, RecommendJsonIsGolden) {
  auto r = Cli({"recommend", "--kb", Kb(), "--profile", Profile(), "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, testing::ReadText(testing::GoldenDir() / "recommend_example.json"));
}

TEST(CliTest, RecommendTableNamesTopChain) {
  auto r = Cli({"recommend", "--kb", Kb(), "--profile", Profile(), "--table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chain-d"), std::string::npos);
}

TEST(CliTest, ErrorConflictExitsTwo) {
  testing::TempDir dir;
  testing::WriteText(dir.path() / "p.json",
                     R"({"requirements": {"immutability": {"required": true},
                         "modifiability": {"level": "extremely-desirable"}}})");
  std::string p = (dir.path() / "p.json").string();
  EXPECT_EQ(Cli({"recommend", "--kb", Kb(), "--profile", p}).code, 2);
  EXPECT_EQ(Cli({"conflicts", "--kb", Kb(), "--profile", p}).code, 2);
}

TEST(CliTest, GenerateIncompleteExitsTwo) {
  testing::TempDir dir;
  testing::WriteText(dir.path() / "c.json", R"({"selected": ["bc-chain-c"]})");
  auto r = Cli({"generate", "--kb", Kb(), "--model", Model(), "--config",
                (dir.path() / "c.json").string(), "--out", (dir.path() / "out").string(),
                "--var", "project=demo", "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out).at("code"), "invalid-configuration");
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "out"));
}

TEST(CliTest, UsageAndIoErrorsExitOne) {
  EXPECT_EQ(Cli({}).code, 1);
  EXPECT_EQ(Cli({"recommend", "--kb", Kb()}).code, 1);
  EXPECT_EQ(Cli({"frobnicate"}).code, 1);
  auto missing = Cli({"recommend", "--kb", Kb(), "--profile", "/nonexistent.json", "--json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(json::parse(missing.out).at("code"), "missing-file");
  EXPECT_EQ(Cli({"generate", "--kb", Kb(), "--model", Model(), "--config",
                 testing::GoldenConfigFile().string(), "--out", "/tmp/x", "--var", "novalue"})
                .code,
            1);
  EXPECT_EQ(Cli({"--help"}).code, 0);
}

TEST(CliTest, JsonOutputEqualsApiBodies) {
  testing::TempDir dir;
  std::string report_file = (dir.path() / "report.json").string();
  auto recommend = Cli({"recommend", "--kb", Kb(), "--profile", Profile(), "--json"});
  testing::WriteText(report_file, recommend.out);
  std::string profile = testing::ReadText(testing::ProfileFile());
  EXPECT_EQ(recommend.out, TheApi().Handle("POST", "/api/recommend", profile).Render());
  EXPECT_EQ(Cli({"conflicts", "--kb", Kb(), "--profile", Profile(), "--json"}).out,
            TheApi().Handle("POST", "/api/conflicts", profile).Render());
  EXPECT_EQ(Cli({"blocked", "--kb", Kb(), "--profile", Profile(), "--json"}).out,
            TheApi().Handle("POST", "/api/blocked", profile).Render());
  EXPECT_EQ(Cli({"explain", "--kb", Kb(), "--profile", Profile(), "--blockchain", "chain-c",
                 "--json"})
                .out,
            TheApi()
                .Handle("POST", "/api/explain",
                        json({{"profile", json::parse(profile)}, {"blockchain_id", "chain-c"}})
                            .dump())
                .Render());
  auto pre = Cli({"preselect", "--model", Model(), "--report", report_file, "--json"});
  EXPECT_EQ(pre.out, TheApi().Handle("POST", "/api/preselect", recommend.out).Render());
  std::string config_file = (dir.path() / "pre.json").string();
  testing::WriteText(config_file, pre.out);
  EXPECT_EQ(Cli({"configure", "complete", "--model", Model(), "--config", config_file, "--json"})
                .out,
            TheApi().Handle("POST", "/api/configure/complete", pre.out).Render());
  EXPECT_EQ(Cli({"configure", "validate", "--model", Model(), "--config", config_file, "--json"})
                .out,
            TheApi().Handle("POST", "/api/configure/validate", pre.out).Render());
}

TEST(CliTest, GenerateJsonEqualsApiManifest) {
  testing::TempDir dir;
  auto r = Cli({"generate", "--kb", Kb(), "--model", Model(), "--config",
                testing::GoldenConfigFile().string(), "--out", dir.path().string(), "--var",
                "project=demo", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json request = {{"configuration", json::parse(testing::ReadText(testing::GoldenConfigFile()))},
                  {"variables", {{"project", "demo"}}}};
  auto api = TheApi().Handle("POST", "/api/generate", request.dump());
  EXPECT_EQ(r.out, RenderJson(api.body.at("manifest")));
  EXPECT_EQ(r.out, testing::ReadText(dir.path() / "manifest.json"));
}

TEST(CliTest, EnumerateCountsFixture) {
  auto r = Cli({"configure", "enumerate", "--model", Model(), "--json"});
  EXPECT_EQ(r.code, 0);
  json golden = json::parse(testing::ReadText(testing::GoldenDir() / "fixture_enumeration.json"));
  EXPECT_EQ(json::parse(r.out).at("count"), golden.at("count"));
  EXPECT_EQ(Cli({"configure", "enumerate", "--model", Model(), "--limit", "5"}).code, 2);
}

TEST(CliTest, ServeRefusesBrokenInputs) {
  EXPECT_EQ(Cli({"serve", "--kb", "/nonexistent", "--model", Model()}).code, 1);
  testing::TempDir dir;
  testing::WriteText(dir.path() / "m.json", R"({"version": "1", "features": []})");
  EXPECT_NE(Cli({"serve", "--kb", Kb(), "--model", (dir.path() / "m.json").string()}).code, 0);
}

}  // namespace
}  // namespace harmonica::gateway
