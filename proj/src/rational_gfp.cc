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

#include "ratlearn/rational_gfp.h"

#include <stdexcept>
#include <string>

namespace ratlearn {

std::pair<ActionIndex, ActionIndex> ExplorationCell(std::int64_t t, int rows,
                                                    int cols) {
  const std::int64_t cells = static_cast<std::int64_t>(rows) * cols;
  if (t < 1 || t > cells) {
    throw std::out_of_range("exploration step " + std::to_string(t) +
                            " outside 1.." + std::to_string(cells));
  }
  const std::int64_t q = (t + cols - 1) / cols;
  return {ActionIndex(static_cast<int>(q)),
          ActionIndex(static_cast<int>(t - (q - 1) * cols))};
}

Matrix RGfpExplorationMatrix(std::int64_t t, int rows, int cols, double mu) {
  const auto [row, col] = ExplorationCell(t, rows, cols);
  Matrix e(rows, cols);
  e(row.offset(), col.offset()) = mu;
  return e;
}

RationalGfpPolicy::RationalGfpPolicy(Player side, int rows, int cols,
                                     RGfpConfig config, RandomStream rng)
    : Policy(side),
      rows_(rows),
      cols_(cols),
      config_(config),
      rng_(rng),
      own_partial_(rows, cols),
      opp_partial_(rows, cols),
      own_actions_(side == Player::kOne ? rows : cols, config.window),
      opp_actions_(side == Player::kOne ? cols : rows, config.window) {
  if (!(config_.mu > 0.0)) {
    throw std::invalid_argument("R-GFP mu must be positive");
  }
}

ActionIndex RationalGfpPolicy::Act(std::int64_t t) {
  switch (phase_) {
    case Phase::kPunish:
      return punishment_->Strategy().Sample(
          rng_.Uniform(static_cast<std::uint64_t>(t)));
    case Phase::kExplore: {
      const auto cell = ExplorationCell(t, rows_, cols_);
      return side() == Player::kOne ? cell.first : cell.second;
    }
    default:
      // The own matrix is incomplete only when this agent itself left the
      // sweep, e.g. inside a deviation wrapper.
      return GfpBestResponse(
          own_matrix_ ? *own_matrix_ : own_partial_.ZeroFill(),
          opp_actions_.counts(), AxisOf(side()));
  }
}

void RationalGfpPolicy::Observe(const Observation& obs) {
  const Player me = side();
  const Player them = Opponent(me);
  if (auto own = obs.payoff(me)) {
    if (own_partial_.Reveal(obs.row, obs.col, *own) &&
        own_partial_.FullyKnown()) {
      own_matrix_ = own_partial_.ZeroFill();
    }
  }
  if (auto opp = obs.payoff(them)) {
    if (opp_partial_.Reveal(obs.row, obs.col, *opp) &&
        opp_partial_.FullyKnown()) {
      opp_matrix_ = opp_partial_.ZeroFill();
    }
  }
  const ActionIndex their_action = obs.action(them);

  switch (phase_) {
    case Phase::kPunish:
      punishment_->Observe(obs.row, obs.col, obs.payoff(them));
      return;
    case Phase::kExplore: {
      const auto cell = ExplorationCell(obs.t, rows_, cols_);
      const ActionIndex scheduled =
          them == Player::kOne ? cell.first : cell.second;
      if (their_action != scheduled) {
        EnterPunishment(obs.t);
        return;
      }
      if (obs.t == static_cast<std::int64_t>(rows_) * cols_) {
        phase_ = Phase::kExploit;
      }
      break;
    }
    default: {
      // Without the opponent's payoffs (imperfect monitoring) its best
      // response cannot be recomputed, so nothing is checked.
      if (opp_matrix_) {
        const ActionIndex expected = GfpBestResponse(
            *opp_matrix_, own_actions_.counts(), AxisOf(them));
        if (their_action != expected) {
          EnterPunishment(obs.t);
          return;
        }
      }
      break;
    }
  }
  own_actions_.Push(obs.action(me));
  opp_actions_.Push(their_action);
}

void RationalGfpPolicy::EnterPunishment(std::int64_t t) {
  phase_ = Phase::kPunish;
  punish_start_ = t;
  punishment_.emplace(opp_partial_, Opponent(side()));
  events_.push_back({t, "punish", 0.0});
}

std::vector<PolicyEvent> RationalGfpPolicy::DrainEvents() {
  std::vector<PolicyEvent> out;
  out.swap(events_);
  return out;
}

}  // namespace ratlearn
