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

// Rational generalized fictitious play.
//
// Steps 1..rows*cols form a coordinated sweep that reveals one payoff cell
// per step in row-major order. Any off-schedule opponent action during the
// sweep is a deviation. Afterwards both agents play generalized fictitious
// play with a shared history window, and each one checks that the
// opponent's action equals the opponent's own GFP best response (lowest
// index on ties). A detected deviation starts the absorbing minimax
// punishment against the deviator's payoff matrix as known at that moment.

#ifndef RATLEARN_RATIONAL_GFP_H_
#define RATLEARN_RATIONAL_GFP_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ratlearn/dynamics.h"
#include "ratlearn/policy.h"
#include "ratlearn/punishment.h"

namespace ratlearn {

struct RGfpConfig {
  double mu = 1.0;  // value placed in the exploration matrix; any mu > 0
  HistoryWindow window = HistoryWindow::Full();
};

// Cell revealed at sweep step t (1 <= t <= rows*cols): row ceil(t/cols),
// column t - (row-1)*cols. Throws std::out_of_range otherwise.
std::pair<ActionIndex, ActionIndex> ExplorationCell(std::int64_t t, int rows,
                                                    int cols);

// Zero matrix with `mu` at ExplorationCell(t).
Matrix RGfpExplorationMatrix(std::int64_t t, int rows, int cols, double mu);

class RationalGfpPolicy : public Policy {
 public:
  RationalGfpPolicy(Player side, int rows, int cols, RGfpConfig config,
                    RandomStream rng);

  ActionIndex Act(std::int64_t t) override;
  void Observe(const Observation& obs) override;
  Phase phase() const override { return phase_; }
  std::vector<PolicyEvent> DrainEvents() override;

  const PartialPayoffMatrix& own_partial() const { return own_partial_; }
  const PartialPayoffMatrix& opp_partial() const { return opp_partial_; }
  // Step at which punishment began, if it has.
  std::optional<std::int64_t> punish_start() const { return punish_start_; }
  const PunishmentState* punishment() const {
    return punishment_ ? &*punishment_ : nullptr;
  }

 private:
  void EnterPunishment(std::int64_t t);

  int rows_;
  int cols_;
  RGfpConfig config_;
  RandomStream rng_;
  Phase phase_ = Phase::kExplore;
  PartialPayoffMatrix own_partial_;
  PartialPayoffMatrix opp_partial_;
  std::optional<Matrix> own_matrix_;  // set once own_partial_ is complete
  std::optional<Matrix> opp_matrix_;
  FrequencyTracker own_actions_;  // what the opponent's GFP responds to
  FrequencyTracker opp_actions_;  // what our GFP responds to
  std::optional<PunishmentState> punishment_;
  std::optional<std::int64_t> punish_start_;
  std::vector<PolicyEvent> events_;
};

}  // namespace ratlearn

#endif  // RATLEARN_RATIONAL_GFP_H_
