// Copyright 2026 The ratlearn Authors
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

#include "ratlearn/minimax.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ratlearn {
namespace {

constexpr double kPivotEps = 1e-12;

}  // namespace

LpResult SolveStandardFormLp(const Matrix& a, const std::vector<double>& b,
                             const std::vector<double>& c) {
  const int m = a.rows();
  const int n = a.cols();
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n) {
    throw DimensionError("LP data sizes disagree");
  }
  for (double bi : b) {
    if (bi < 0.0) throw SolverError("right-hand side must be nonnegative");
  }

  // Columns: n structural, m slack, then the right-hand side.
  const int width = n + m + 1;
  Matrix tableau(m + 1, width);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tableau(i, j) = a(i, j);
    tableau(i, n + i) = 1.0;
    tableau(i, width - 1) = b[i];
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) tableau(m, j) = -c[j];

  const int max_pivots = 50 * (n + m + 1);
  for (int pivots = 0;; ++pivots) {
    if (pivots > max_pivots) {
      throw SolverError("simplex exceeded " + std::to_string(max_pivots) +
                        " pivots on a " + std::to_string(m) + "x" +
                        std::to_string(n) + " problem");
    }
    int entering = -1;
    for (int j = 0; j < n + m; ++j) {
      if (tableau(m, j) < -kPivotEps) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double coef = tableau(i, entering);
      if (coef <= kPivotEps) continue;
      const double ratio = tableau(i, width - 1) / coef;
      if (ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving < 0) throw SolverError("LP is unbounded");

    const double pivot = tableau(leaving, entering);
    for (int j = 0; j < width; ++j) tableau(leaving, j) /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      const double factor = tableau(i, entering);
      if (factor == 0.0) continue;
      for (int j = 0; j < width; ++j) {
        tableau(i, j) -= factor * tableau(leaving, j);
      }
    }
    basis[leaving] = entering;
  }

  LpResult result;
  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = tableau(i, width - 1);
  }
  result.objective = tableau(m, width - 1);
  return result;
}

MinimaxSolution MixedMinimax(const Matrix& matrix, Player target) {
  if (matrix.empty()) throw DimensionError("empty payoff matrix");
  // Rows: deviator actions (constraints). Columns: punisher actions.
  const Matrix oriented =
      target == Player::kOne ? matrix : matrix.Transposed();
  const int deviator_actions = oriented.rows();
  const int punisher_actions = oriented.cols();

  // Shift so every entry is >= 1; then with x = z / v the problem becomes
  //   max sum(x)  s.t.  M x <= 1,  x >= 0,   v = 1 / sum(x).
  const double shift = std::max(0.0, 1.0 - oriented.MinEntry());
  Matrix shifted = oriented;
  for (int r = 0; r < deviator_actions; ++r) {
    for (int c = 0; c < punisher_actions; ++c) shifted(r, c) += shift;
  }
  const LpResult lp =
      SolveStandardFormLp(shifted, std::vector<double>(deviator_actions, 1.0),
                          std::vector<double>(punisher_actions, 1.0));
  const double total = std::accumulate(lp.x.begin(), lp.x.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw SolverError("degenerate minimax LP solution on " +
                      matrix.ToString());
  }
  std::vector<double> probs(punisher_actions);
  for (int k = 0; k < punisher_actions; ++k) {
    probs[k] = std::max(0.0, lp.x[k] / total);
  }
  const double renorm = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& p : probs) p /= renorm;

  const double value = 1.0 / lp.objective - shift;
  return {value, MixedStrategy(std::move(probs))};
}

}  // namespace ratlearn
