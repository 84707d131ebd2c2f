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

#include "ratlearn/baselines.h"

namespace ratlearn {
namespace {

int OpponentActions(const Matrix& own, Player side) {
  return side == Player::kOne ? own.cols() : own.rows();
}

}  // namespace

FictitiousPlayPolicy::FictitiousPlayPolicy(Player side, Matrix own_matrix,
                                           HistoryWindow window,
                                           const History& prior)
    : Policy(side),
      own_matrix_(std::move(own_matrix)),
      opponent_(OpponentActions(own_matrix_, side), window) {
  for (const JointOutcome& step : prior.steps()) {
    opponent_.Push(step.action(Opponent(side)));
  }
}

ActionIndex FictitiousPlayPolicy::Act(std::int64_t) {
  return GfpBestResponse(own_matrix_, opponent_.counts(), AxisOf(side()));
}

void FictitiousPlayPolicy::Observe(const Observation& obs) {
  opponent_.Push(obs.action(Opponent(side())));
}

RegretMatchingPolicy::RegretMatchingPolicy(Player side, Matrix own_matrix,
                                           RandomStream rng)
    : Policy(side),
      own_matrix_(std::move(own_matrix)),
      num_actions_(side == Player::kOne ? own_matrix_.rows()
                                        : own_matrix_.cols()),
      regret_(num_actions_),
      rng_(rng) {}

ActionIndex RegretMatchingPolicy::Act(std::int64_t t) {
  return RegretMatchingDistribution(regret_, num_actions_)
      .Sample(rng_.Uniform(static_cast<std::uint64_t>(t)));
}

void RegretMatchingPolicy::Observe(const Observation& obs) {
  AccumulateRegret(regret_,
                   InstantaneousRegret(own_matrix_, obs.action(side()),
                                       obs.action(Opponent(side())),
                                       AxisOf(side())));
}

}  // namespace ratlearn
