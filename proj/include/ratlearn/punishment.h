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

// Minimax punishment of a detected deviator whose payoff matrix may be only
// partly known. Punishment is absorbing.
//
// Until the deviator has at least one action whose payoffs against every
// punisher action are known, the punisher plays uniformly. After that it
// plays the minimax strategy of the zero-filled estimate, recomputed
// whenever a new entry is revealed. Once everything is known it is the
// minimax strategy of the true matrix.

#ifndef RATLEARN_PUNISHMENT_H_
#define RATLEARN_PUNISHMENT_H_

#include <optional>

#include "ratlearn/game.h"
#include "ratlearn/minimax.h"

namespace ratlearn {

class PunishmentState {
 public:
  // `deviator_partial` is the deviator's payoff matrix in game orientation
  // (rows are agent one's actions).
  PunishmentState(PartialPayoffMatrix deviator_partial, Player deviator);

  // The mixture the punisher samples from this step.
  const MixedStrategy& Strategy();

  // Records the deviator's payoff for the realized cell when observed.
  // Invalidates the cached strategy if the entry is new.
  void Observe(ActionIndex row, ActionIndex col,
               std::optional<double> deviator_payoff);

  Player deviator() const { return deviator_; }
  const PartialPayoffMatrix& deviator_partial() const { return partial_; }
  bool cache_valid() const { return cached_.has_value(); }
  int recompute_count() const { return recompute_count_; }
  // True when the strategy comes from a minimax solve rather than the
  // uniform fallback.
  bool using_minimax() const;

 private:
  void WarnIfNegative(double payoff);

  PartialPayoffMatrix partial_;
  Player deviator_;
  std::optional<MixedStrategy> cached_;
  int recompute_count_ = 0;
  bool warned_negative_ = false;
};

// The punisher's mixture for the given knowledge state, computed fresh.
MixedStrategy PunishmentStrategy(const PartialPayoffMatrix& deviator_partial,
                                 Player deviator);

}  // namespace ratlearn

#endif  // RATLEARN_PUNISHMENT_H_
