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

#ifndef HARMONICA_TESTS_SUPPORT_TOPSIS_ORACLE_H_
#define HARMONICA_TESTS_SUPPORT_TOPSIS_ORACLE_H_

#include <vector>

// Textbook TOPSIS written straight from the formulas, with no code shared
// with the library. Computes in long double.
namespace harmonica::testing {

struct OracleInput {
  std::vector<std::vector<double>> scores;  // [alternative][criterion]
  std::vector<double> weights;              // per criterion
  std::vector<bool> benefit;                // per criterion
};

struct OracleResult {
  std::vector<double> closeness;  // per alternative, input order
  std::vector<double> d_plus;
  std::vector<double> d_minus;
};

OracleResult OracleTopsis(const OracleInput& input);

}  // namespace harmonica::testing

#endif  // HARMONICA_TESTS_SUPPORT_TOPSIS_ORACLE_H_
