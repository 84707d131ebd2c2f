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

#include "ratlearn/catalog.h"

#include <random>
#include <stdexcept>

namespace ratlearn {
namespace {

void CheckC(double c) {
  if (!(c >= 1.0)) throw std::invalid_argument("c must be >= 1");
}

}  // namespace

StageGame MakeExploitableFpGame(double c) {
  CheckC(c);
  const double high = 10.0 * (c + 1.0);
  return StageGame(Matrix{{10, 4, 3}, {2, 1, 6}},
                   Matrix{{10, 4, 3}, {1, high + 10.0, high}});
}

StageGame MakeExploitableRmGame(double c) {
  CheckC(c);
  const double top = 5.0 * (c + 1.0);
  return StageGame(Matrix{{top, 1}, {top + 5.0, 5}}, Matrix{{3, 2}, {2, 5}});
}

std::pair<StageGame, StageGame> MakeMonitoringPair(double c) {
  CheckC(c);
  const double high = 10.0 * (c + 1.0);
  const Matrix shared{{5, 1}, {2, 4}};
  return {StageGame(shared, Matrix{{1, 6}, {2, 7}}),
          StageGame(shared, Matrix{{10, 1}, {high + 10.0, high}})};
}

StageGame RandomGame(int rows, int cols, double max_payoff,
                     std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw DimensionError("game must be non-empty");
  if (!(max_payoff > 0.0)) {
    throw std::invalid_argument("max_payoff must be positive");
  }
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // 1 - u maps [0, 1) onto (0, 1], keeping every entry strictly positive.
  auto draw = [&] {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m(r, c) = max_payoff * (1.0 - unit(gen));
    }
    return m;
  };
  Matrix p1 = draw();
  Matrix p2 = draw();
  return StageGame(std::move(p1), std::move(p2));
}

}  // namespace ratlearn
