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

#ifndef RATLEARN_BASELINES_H_
#define RATLEARN_BASELINES_H_

#include "ratlearn/dynamics.h"
#include "ratlearn/policy.h"

namespace ratlearn {

// (Generalized) fictitious play with its own payoff matrix known.
class FictitiousPlayPolicy : public Policy {
 public:
  FictitiousPlayPolicy(Player side, Matrix own_matrix, HistoryWindow window,
                       const History& prior = {});

  ActionIndex Act(std::int64_t t) override;
  void Observe(const Observation& obs) override;

 private:
  Matrix own_matrix_;
  FrequencyTracker opponent_;
};

// Regret matching with its own payoff matrix known.
class RegretMatchingPolicy : public Policy {
 public:
  RegretMatchingPolicy(Player side, Matrix own_matrix, RandomStream rng);

  ActionIndex Act(std::int64_t t) override;
  void Observe(const Observation& obs) override;

  const RegretState& regret() const { return regret_; }

 private:
  Matrix own_matrix_;
  int num_actions_;
  RegretState regret_;
  RandomStream rng_;
};

}  // namespace ratlearn

#endif  // RATLEARN_BASELINES_H_
