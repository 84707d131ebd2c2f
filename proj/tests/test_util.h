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


// Drives two policies directly so tests can inspect their internal state.

#ifndef RATLEARN_TESTS_TEST_UTIL_H_
#define RATLEARN_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <vector>

#include "ratlearn/game.h"
#include "ratlearn/policy.h"

namespace ratlearn::testing {

struct Step {
  ActionIndex row;
  ActionIndex col;
  Phase phase1;
  Phase phase2;
};

inline Observation MakeObservation(const StageGame& game, std::int64_t t,
                                   ActionIndex row, ActionIndex col) {
  const JointOutcome o = Play(game, row, col);
  Observation obs;
  obs.t = t;
  obs.row = row;
  obs.col = col;
  obs.payoff1 = o.payoff1;
  obs.payoff2 = o.payoff2;
  return obs;
}

// Plays steps first..last. Each agent sees its own payoff, and the other's
// only when `perfect`.
inline std::vector<Step> PlaySteps(const StageGame& game, Policy& p1,
                                   Policy& p2, std::int64_t first,
                                   std::int64_t last, bool perfect = true) {
  std::vector<Step> steps;
  for (std::int64_t t = first; t <= last; ++t) {
    const ActionIndex row = p1.Act(t);
    const ActionIndex col = p2.Act(t);
    steps.push_back({row, col, p1.phase(), p2.phase()});
    Observation obs = MakeObservation(game, t, row, col);
    Observation obs1 = obs, obs2 = obs;
    if (!perfect) {
      obs1.payoff2.reset();
      obs2.payoff1.reset();
    }
    p1.Observe(obs1);
    p2.Observe(obs2);
  }
  return steps;
}

}  // namespace ratlearn::testing

#endif  // RATLEARN_TESTS_TEST_UTIL_H_
