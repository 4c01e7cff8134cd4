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

#include "topsis_oracle.h"

#include <cmath>

namespace harmonica::testing {

OracleResult OracleTopsis(const OracleInput& input) {
  const size_t m = input.scores.size();
  const size_t n = input.weights.size();

  std::vector<long double> norm(n, 0.0L);
  for (size_t j = 0; j < n; ++j) {
    long double sum = 0.0L;
    for (size_t i = 0; i < m; ++i) {
      long double x = input.scores[i][j];
      sum += x * x;
    }
    norm[j] = std::sqrt(sum);
  }

  std::vector<std::vector<long double>> v(m, std::vector<long double>(n, 0.0L));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      long double r = norm[j] == 0.0L ? 0.0L : input.scores[i][j] / norm[j];
      v[i][j] = r * input.weights[j];
    }
  }

  std::vector<long double> best(n), worst(n);
  for (size_t j = 0; j < n; ++j) {
    long double hi = v[0][j], lo = v[0][j];
    for (size_t i = 1; i < m; ++i) {
      if (v[i][j] > hi) hi = v[i][j];
      if (v[i][j] < lo) lo = v[i][j];
    }
    best[j] = input.benefit[j] ? hi : lo;
    worst[j] = input.benefit[j] ? lo : hi;
  }

  OracleResult out;
  for (size_t i = 0; i < m; ++i) {
    long double sp = 0.0L, sm = 0.0L;
    for (size_t j = 0; j < n; ++j) {
      sp += (v[i][j] - best[j]) * (v[i][j] - best[j]);
      sm += (v[i][j] - worst[j]) * (v[i][j] - worst[j]);
    }
    long double dp = std::sqrt(sp), dm = std::sqrt(sm);
    long double c = (dp + dm) == 0.0L ? 0.5L : dm / (dp + dm);
    out.closeness.push_back(static_cast<double>(c));
    out.d_plus.push_back(static_cast<double>(dp));
    out.d_minus.push_back(static_cast<double>(dm));
  }
  return out;
}

}  // namespace harmonica::testing
