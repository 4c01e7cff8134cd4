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
#include "harmonica/blade/profile.h"
#include "harmonica/error.h"
#include "harmonica/kb/knowledge_base.h"
#include "test_env.h"

namespace harmonica::blade {
namespace {

using nlohmann::json;

ErrorCode Code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

TEST(ProfileTest, RequiredIsExtremelyDesirable) {
  Requirement r{"latency", PreferenceLevel::kSlightlyDesirable, true, 4};
  EXPECT_EQ(r.EffectiveLevel(), PreferenceLevel::kExtremelyDesirable);
  EXPECT_EQ(r.RawWeight(), 4);
  EXPECT_TRUE(r.IsActive());
  Requirement idle{"latency", PreferenceLevel::kIndifferent, false, std::nullopt};
  EXPECT_FALSE(idle.IsActive());
}

TEST(ProfileTest, AbsentAttributeIsIndifferent) {
  PreferenceProfile p;
  p.Set("throughput", PreferenceLevel::kDesirable);
  EXPECT_EQ(p.Get("latency").level, PreferenceLevel::kIndifferent);
  EXPECT_FALSE(p.IsActive("latency"));
  EXPECT_TRUE(p.IsActive("throughput"));
}

TEST(ProfileTest, FromJsonDefaults) {
  auto p = ProfileFromJson(json::parse(R"({"requirements": {
      "latency": {"level": "desirable"},
      "access-control": {"required": true}}})"));
  EXPECT_EQ(p.Get("latency").level, PreferenceLevel::kDesirable);
  EXPECT_FALSE(p.Get("latency").required);
  EXPECT_EQ(p.Get("access-control").level, PreferenceLevel::kIndifferent);
  EXPECT_EQ(p.Get("access-control").min_level, kDefaultMinLevel);
}

TEST(ProfileTest, FromJsonRejectsMalformed) {
  EXPECT_EQ(Code([] { ProfileFromJson(json::array()); }), ErrorCode::kBadRequest);
  EXPECT_EQ(Code([] { ProfileFromJson(json::parse(R"({"reqs": {}})")); }),
            ErrorCode::kBadRequest);
  EXPECT_EQ(Code([] {
              ProfileFromJson(json::parse(R"({"requirements": {"a": {"level": "great"}}})"));
            }),
            ErrorCode::kBadRequest);
  EXPECT_EQ(Code([] {
              ProfileFromJson(json::parse(R"({"requirements": {"a": {"min_level": 2}}})"));
            }),
            ErrorCode::kBadRequest);
  EXPECT_EQ(Code([] {
              ProfileFromJson(json::parse(R"({"requirements": {"a": {"weight": 2}}})"));
            }),
            ErrorCode::kBadRequest);
}

TEST(ProfileTest, JsonRoundTrip) {
  PreferenceProfile p;
  p.Set("throughput", PreferenceLevel::kHighlyDesirable).Require("access-control", 4);
  EXPECT_EQ(ToJson(ProfileFromJson(ToJson(p))), ToJson(p));
}

TEST(ProfileTest, ValidateAgainstCatalog) {
  auto kb = kb::LoadKnowledgeBase(testing::KbDir());
  PreferenceProfile unknown;
  unknown.Set("speed", PreferenceLevel::kDesirable);
  EXPECT_EQ(Code([&] { ValidateProfile(unknown, kb); }), ErrorCode::kUnknownAttribute);
  PreferenceProfile out_of_scale;
  out_of_scale.Require("latency", 6);
  EXPECT_EQ(Code([&] { ValidateProfile(out_of_scale, kb); }), ErrorCode::kBadRequest);
  PreferenceProfile fine;
  fine.Require("latency", 5).Set("throughput", PreferenceLevel::kDesirable);
  EXPECT_NO_THROW(ValidateProfile(fine, kb));
}

}  // namespace
}  // namespace harmonica::blade
