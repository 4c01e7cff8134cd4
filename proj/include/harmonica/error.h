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

#ifndef HARMONICA_ERROR_H_
#define HARMONICA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace harmonica {

// Every failure surfaced by the engines carries one of these codes. The
// kebab-case names returned by ErrorCodeName() are part of the wire contract
// (CLI --json output and HTTP error bodies) and must not change.
enum class ErrorCode {
  kMissingFile,
  kParseError,
  kValidationFailed,
  kNotFound,
  kUnknownAttribute,
  kNoActiveCriteria,
  kAllDisqualified,
  kEmptyMatrix,
  kWeightMismatch,
  kNotRanked,
  kCyclicTree,
  kMultipleRoots,
  kStructuralError,
  kUnmappedBlockchain,
  kUnknownFeature,
  kContradiction,
  kExceededLimit,
  kTemplateSyntax,
  kUnbalancedBlock,
  kUnknownVariable,
  kInvalidConfiguration,
  kPathCollision,
  kPathEscape,
  kMissingRanking,
  kIo,
  kBadRequest,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  const nlohmann::json& details() const { return details_; }

 private:
  ErrorCode code_;
  nlohmann::json details_;
};

}  // namespace harmonica

#endif  // HARMONICA_ERROR_H_
