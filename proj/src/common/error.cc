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

#include "harmonica/error.h"

namespace harmonica {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFile: return "missing-file";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kValidationFailed: return "kb-validation-failed";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kUnknownAttribute: return "unknown-attribute";
    case ErrorCode::kNoActiveCriteria: return "no-active-criteria";
    case ErrorCode::kAllDisqualified: return "all-disqualified";
    case ErrorCode::kEmptyMatrix: return "empty-matrix";
    case ErrorCode::kWeightMismatch: return "weight-mismatch";
    case ErrorCode::kNotRanked: return "not-ranked";
    case ErrorCode::kCyclicTree: return "cyclic-tree";
    case ErrorCode::kMultipleRoots: return "multiple-roots";
    case ErrorCode::kStructuralError: return "structural-error";
    case ErrorCode::kUnmappedBlockchain: return "unmapped-blockchain";
    case ErrorCode::kUnknownFeature: return "unknown-feature";
    case ErrorCode::kContradiction: return "contradiction";
    case ErrorCode::kExceededLimit: return "exceeded-limit";
    case ErrorCode::kTemplateSyntax: return "template-syntax";
    case ErrorCode::kUnbalancedBlock: return "unbalanced-block";
    case ErrorCode::kUnknownVariable: return "unknown-variable";
    case ErrorCode::kInvalidConfiguration: return "invalid-configuration";
    case ErrorCode::kPathCollision: return "path-collision";
    case ErrorCode::kPathEscape: return "path-escape";
    case ErrorCode::kMissingRanking: return "missing-ranking";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kBadRequest: return "bad-request";
  }
  return "internal";
}

}  // namespace harmonica
