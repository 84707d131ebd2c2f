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

#ifndef RATLEARN_MINIMAX_H_
#define RATLEARN_MINIMAX_H_

#include <stdexcept>
#include <vector>

#include "ratlearn/game.h"
#include "ratlearn/matrix.h"

namespace ratlearn {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinimaxSolution {
  // The deviator's best guaranteed payoff against `strategy`.
  double value = 0.0;
  // The punisher's mixture: over agent two's actions (columns) when the
  // target is agent one, over agent one's actions (rows) when the target is
  // agent two. It is the distribution the punisher samples from.
  MixedStrategy strategy;
};

// Zero-sum value of the deviator's payoff matrix, with the deviator
// maximizing and the punisher minimizing:
//   min_{punisher mix} max_{deviator mix} payoff.
// `matrix` is in game orientation (rows are agent one's actions).
MinimaxSolution MixedMinimax(const Matrix& matrix, Player target);

// Dense tableau simplex for  max c'x  s.t.  A x <= b, x >= 0  with b >= 0,
// so the origin is a feasible starting basis. Bland's rule is used for
// pivot selection. Throws SolverError on unboundedness or when the
// iteration cap is exceeded.
struct LpResult {
  double objective = 0.0;
  std::vector<double> x;
};
LpResult SolveStandardFormLp(const Matrix& a, const std::vector<double>& b,
                             const std::vector<double>& c);

}  // namespace ratlearn

#endif  // RATLEARN_MINIMAX_H_
