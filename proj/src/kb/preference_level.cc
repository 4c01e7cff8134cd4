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

#include "harmonica/kb/preference_level.h"

#include <array>

namespace harmonica {

namespace {

constexpr std::array<std::string_view, kPreferenceLevelCount> kLabels = {
    "indifferent", "slightly-desirable", "desirable", "highly-desirable",
    "extremely-desirable"};

}  // namespace

std::string_view PreferenceLevelLabel(PreferenceLevel level) {
  return kLabels[static_cast<size_t>(ToInt(level))];
}

std::optional<PreferenceLevel> ParsePreferenceLevel(std::string_view label) {
  for (size_t i = 0; i < kLabels.size(); ++i) {
    if (kLabels[i] == label) return static_cast<PreferenceLevel>(i);
  }
  return std::nullopt;
}

std::optional<PreferenceLevel> PreferenceLevelFromInt(int value) {
  if (value < 0 || value >= kPreferenceLevelCount) return std::nullopt;
  return static_cast<PreferenceLevel>(value);
}

}  // namespace harmonica
