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

#include <random>

#include "gtest/gtest.h"
#include "harmonica/error.h"
#include "harmonica/gateway/archive.h"

namespace harmonica::gateway {
namespace {

TEST(Base64Test, KnownVectors) {
  EXPECT_EQ(Base64Encode(""), "");
  EXPECT_EQ(Base64Encode("f"), "Zg==");
  EXPECT_EQ(Base64Encode("fo"), "Zm8=");
  EXPECT_EQ(Base64Encode("foo"), "Zm9v");
  EXPECT_EQ(Base64Encode("foobar"), "Zm9vYmFy");
  EXPECT_EQ(Base64Decode("Zm9vYg=="), "foob");
}

TEST(Base64Test, RoundTripsBinary) {
  std::mt19937 rng(3);
  for (size_t n = 0; n < 70; ++n) {
    std::string data(n, '\0');
    for (auto& c : data) c = static_cast<char>(rng());
    EXPECT_EQ(Base64Decode(Base64Encode(data)), data);
  }
}

TEST(Base64Test, RejectsMalformed) {
  EXPECT_THROW(Base64Decode("abc"), Error);
  EXPECT_THROW(Base64Decode("a!c="), Error);
}

TEST(ZipTest, RoundTripPreservesOrderContentAndMode) {
  std::vector<ArchiveEntry> entries = {
      {"a.txt", "hello\n", false},
      {"dir/b.sh", "#!/bin/sh\necho hi\n", true},
      {"empty", "", false},
  };
  auto back = ReadZip(WriteZip(entries));
  ASSERT_EQ(back.size(), entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    EXPECT_EQ(back[i].path, entries[i].path);
    EXPECT_EQ(back[i].content, entries[i].content);
    EXPECT_EQ(back[i].executable, entries[i].executable);
  }
}

TEST(ZipTest, Deterministic) {
  std::vector<ArchiveEntry> entries = {{"x", "1", false}, {"y/z", "22", true}};
  EXPECT_EQ(WriteZip(entries), WriteZip(entries));
  EXPECT_EQ(WriteZip({}).size(), 22u);
}

TEST(ZipTest, RejectsGarbage) {
  EXPECT_THROW(ReadZip("not a zip"), Error);
  std::string zip = WriteZip({{"a", "payload", false}});
  zip[30 + 1 + 2] ^= 0x01;  // flip a content byte: CRC mismatch
  EXPECT_THROW(ReadZip(zip), Error);
}

}  // namespace
}  // namespace harmonica::gateway
