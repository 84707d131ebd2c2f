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

#include "ratlearn/punishment.h"

#include <iostream>

namespace ratlearn {
namespace {

bool GateOpen(const PartialPayoffMatrix& partial, Player deviator) {
  // A deviator action is "complete" when its payoff against every punisher
  // action is known: a row of R^1, or a column of R^2.
  return deviator == Player::kOne ? partial.AnyRowFullyKnown()
                                  : partial.AnyColFullyKnown();
}

}  // namespace

MixedStrategy PunishmentStrategy(const PartialPayoffMatrix& deviator_partial,
                                 Player deviator) {
  const int punisher_actions = deviator == Player::kOne
                                   ? deviator_partial.cols()
                                   : deviator_partial.rows();
  if (!deviator_partial.FullyKnown() && !GateOpen(deviator_partial, deviator)) {
    return MixedStrategy::Uniform(punisher_actions);
  }
  // ZeroFill is the identity on a fully known matrix.
  return MixedMinimax(deviator_partial.ZeroFill(), deviator).strategy;
}

PunishmentState::PunishmentState(PartialPayoffMatrix deviator_partial,
                                 Player deviator)
    : partial_(std::move(deviator_partial)), deviator_(deviator) {}

bool PunishmentState::using_minimax() const {
  return partial_.FullyKnown() || GateOpen(partial_, deviator_);
}

const MixedStrategy& PunishmentState::Strategy() {
  if (!cached_) {
    cached_ = PunishmentStrategy(partial_, deviator_);
    ++recompute_count_;
  }
  return *cached_;
}

void PunishmentState::Observe(ActionIndex row, ActionIndex col,
                              std::optional<double> deviator_payoff) {
  if (!deviator_payoff) return;
  WarnIfNegative(*deviator_payoff);
  if (partial_.Reveal(row, col, *deviator_payoff)) cached_.reset();
}

void PunishmentState::WarnIfNegative(double payoff) {
  if (payoff >= 0.0 || warned_negative_) return;
  warned_negative_ = true;
  std::cerr << "warning: deviator payoff " << payoff
            << " is negative; zero-filling unknown entries is no longer a "
               "lower bound\n";
}

}  // namespace ratlearn
