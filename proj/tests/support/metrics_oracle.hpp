// Copyright 2026 The cleva-compass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLEVA_TESTS_METRICS_ORACLE_HPP_
#define CLEVA_TESTS_METRICS_ORACLE_HPP_

// Straight-line loop versions of the accuracy-matrix measures, written
// against 1-based indices with NaN for absent cells. They share no code
// with the library and are used only as reference values in tests.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<double>>;  // grid[i-1][j-1] = a_{i,j}

inline double A(const Grid& g, std::size_t i, std::size_t j) { return g[i - 1][j - 1]; }

inline double AverageAccuracy(const Grid& g) {
  const std::size_t T = g.size();
  double sum = 0.0;
  for (std::size_t j = 1; j <= T; ++j) sum += A(g, T, j);
  return sum / static_cast<double>(T);
}

// f_j^t for j = 1..t-1.
inline std::vector<double> ForgettingTerms(const Grid& g, std::size_t t) {
  std::vector<double> out;
  for (std::size_t j = 1; j < t; ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < t; ++i) {
      const double v = A(g, i, j);
      if (!std::isnan(v) && v > best) best = v;
    }
    out.push_back(best - A(g, t, j));
  }
  return out;
}

inline std::vector<double> BackwardTerms(const Grid& g, std::size_t t) {
  std::vector<double> out;
  for (std::size_t j = 1; j < t; ++j) out.push_back(A(g, t, j) - A(g, j, j));
  return out;
}

// b is 1-based like the matrix; b[0] is unused.
inline std::vector<double> ForwardTerms(const Grid& g, const std::vector<double>& b) {
  std::vector<double> out;
  for (std::size_t j = 2; j <= g.size(); ++j) out.push_back(A(g, j - 1, j) - b[j - 1]);
  return out;
}

inline double Mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace oracle

#endif  // CLEVA_TESTS_METRICS_ORACLE_HPP_
