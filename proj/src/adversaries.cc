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

#include "ratlearn/adversaries.h"

#include <stdexcept>

namespace ratlearn {

ActionIndex BrExploiterAction(const StageGame& game, Player deviator) {
  const Player other = Opponent(deviator);
  const Matrix& other_payoff = game.payoff(other);
  const int n = game.num_actions(deviator);
  ActionIndex best(1);
  double best_value = 0.0;
  for (int a = 0; a < n; ++a) {
    std::vector<double> pure(n, 0.0);
    pure[a] = 1.0;
    const ActionIndex reply =
        BestResponsePure(other_payoff, pure, AxisOf(other));
    const ActionIndex mine = ActionIndex::FromOffset(a);
    const double value = deviator == Player::kOne
                             ? game.payoff(deviator, mine, reply)
                             : game.payoff(deviator, reply, mine);
    if (a == 0 || value > best_value) {
      best = mine;
      best_value = value;
    }
  }
  return best;
}

WindowedDeviationPolicy::WindowedDeviationPolicy(
    std::unique_ptr<Policy> compliant, std::unique_ptr<Policy> deviant,
    DeviationWindow window)
    : Policy(compliant->side()),
      compliant_(std::move(compliant)),
      deviant_(std::move(deviant)),
      window_(window) {
  if (deviant_->side() != side()) {
    throw std::invalid_argument("wrapped policies must play the same side");
  }
}

ActionIndex WindowedDeviationPolicy::Act(std::int64_t t) {
  deviating_ = window_.Contains(t);
  // Both policies act so that any internal sampling stays aligned with t.
  const ActionIndex honest = compliant_->Act(t);
  const ActionIndex deviant = deviant_->Act(t);
  return deviating_ ? deviant : honest;
}

void WindowedDeviationPolicy::Observe(const Observation& obs) {
  compliant_->Observe(obs);
  deviant_->Observe(obs);
}

Phase WindowedDeviationPolicy::phase() const {
  return deviating_ ? Phase::kDeviate : compliant_->phase();
}

std::vector<PolicyEvent> WindowedDeviationPolicy::DrainEvents() {
  std::vector<PolicyEvent> out = compliant_->DrainEvents();
  for (PolicyEvent& e : deviant_->DrainEvents()) out.push_back(std::move(e));
  return out;
}

}  // namespace ratlearn
