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

#ifndef HARMONICA_GATEWAY_ARCHIVE_H_
#define HARMONICA_GATEWAY_ARCHIVE_H_

#include <string>
#include <string_view>
#include <vector>

namespace harmonica::gateway {

struct ArchiveEntry {
  std::string path;
  std::string content;
  bool executable = false;
};

// Deterministic zip (stored, no compression, fixed 1980-01-01 timestamps) in
// the given entry order.
std::string WriteZip(const std::vector<ArchiveEntry>& entries);

// Reads archives produced by WriteZip(). Throws Error(kBadRequest) on
// anything else.
std::vector<ArchiveEntry> ReadZip(std::string_view data);

std::string Base64Encode(std::string_view data);
std::string Base64Decode(std::string_view text);

}  // namespace harmonica::gateway

#endif  // HARMONICA_GATEWAY_ARCHIVE_H_
