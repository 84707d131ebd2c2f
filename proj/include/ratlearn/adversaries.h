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

// Deviating policies. Adversaries are handed the full game; compliant
// learners never are.

#ifndef RATLEARN_ADVERSARIES_H_
#define RATLEARN_ADVERSARIES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ratlearn/game.h"
#include "ratlearn/policy.h"

namespace ratlearn {

class ConstantActionPolicy : public Policy {
 public:
  ConstantActionPolicy(Player side, ActionIndex action)
      : Policy(side), action_(action) {}

  ActionIndex Act(std::int64_t) override { return action_; }
  void Observe(const Observation&) override {}

 private:
  ActionIndex action_;
};

// Samples i.i.d. from a fixed mixture every step.
class StationaryMixedPolicy : public Policy {
 public:
  StationaryMixedPolicy(Player side, MixedStrategy mix, RandomStream rng)
      : Policy(side), mix_(std::move(mix)), rng_(rng) {}

  ActionIndex Act(std::int64_t t) override {
    return mix_.Sample(rng_.Uniform(static_cast<std::uint64_t>(t)));
  }
  void Observe(const Observation&) override {}

 private:
  MixedStrategy mix_;
  RandomStream rng_;
};

// The constant action a* = argmax_a R^dev(BR(a), a), where BR(a) is the
// other agent's pure best reply to a. Lowest index wins all ties.
ActionIndex BrExploiterAction(const StageGame& game, Player deviator);

struct DeviationWindow {
  std::int64_t start = 0;
  std::optional<std::int64_t> end;  // inclusive; unbounded when empty

  bool Contains(std::int64_t t) const {
    return t >= start && (!end || t <= *end);
  }
};

// Plays `compliant` outside the window and `deviant` inside it. Both inner
// policies observe every step so either can take over with a current view
// of the history.
class WindowedDeviationPolicy : public Policy {
 public:
  WindowedDeviationPolicy(std::unique_ptr<Policy> compliant,
                          std::unique_ptr<Policy> deviant,
                          DeviationWindow window);

  ActionIndex Act(std::int64_t t) override;
  void Observe(const Observation& obs) override;
  Phase phase() const override;
  std::vector<PolicyEvent> DrainEvents() override;

 private:
  std::unique_ptr<Policy> compliant_;
  std::unique_ptr<Policy> deviant_;
  DeviationWindow window_;
  bool deviating_ = false;
};

}  // namespace ratlearn

#endif  // RATLEARN_ADVERSARIES_H_
