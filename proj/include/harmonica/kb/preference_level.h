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

#ifndef HARMONICA_KB_PREFERENCE_LEVEL_H_
#define HARMONICA_KB_PREFERENCE_LEVEL_H_

#include <optional>
#include <string_view>

namespace harmonica {

// Ordinal preference scale; the numeric value doubles as the raw weight.
enum class PreferenceLevel : int {
  kIndifferent = 0,
  kSlightlyDesirable = 1,
  kDesirable = 2,
  kHighlyDesirable = 3,
  kExtremelyDesirable = 4,
};

inline constexpr int kPreferenceLevelCount = 5;

constexpr int ToInt(PreferenceLevel level) { return static_cast<int>(level); }

std::string_view PreferenceLevelLabel(PreferenceLevel level);
std::optional<PreferenceLevel> ParsePreferenceLevel(std::string_view label);
std::optional<PreferenceLevel> PreferenceLevelFromInt(int value);

}  // namespace harmonica

#endif  // HARMONICA_KB_PREFERENCE_LEVEL_H_
