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

#ifndef RATLEARN_POLICY_H_
#define RATLEARN_POLICY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratlearn/game.h"

namespace ratlearn {

enum class Phase { kPlay, kExplore, kExploit, kPunish, kDeviate };

std::string_view PhaseName(Phase phase);

// What one agent sees after a step. Actions are always observed; the
// opponent's payoff is absent under imperfect monitoring.
struct Observation {
  std::int64_t t = 0;  // one-based step that was just played
  ActionIndex row;
  ActionIndex col;
  std::optional<double> payoff1;
  std::optional<double> payoff2;

  ActionIndex action(Player p) const { return p == Player::kOne ? row : col; }
  std::optional<double> payoff(Player p) const {
    return p == Player::kOne ? payoff1 : payoff2;
  }
};

// Counter-based uniform stream: the draw for (seed, stream, counter, draw)
// does not depend on how many draws were taken before it.
class RandomStream {
 public:
  RandomStream() = default;
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  // Uniform in [0, 1).
  double Uniform(std::uint64_t counter, std::uint64_t draw = 0) const;
  RandomStream Substream(std::uint64_t tag) const;

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
};

struct PolicyEvent {
  std::int64_t t = 0;
  std::string kind;  // "punish", "epoch", "ks"
  double value = 0.0;
};

// One agent's decision rule in a repeated game. Act(t) is called once per
// step before either agent observes step t; Observe follows.
class Policy {
 public:
  explicit Policy(Player side) : side_(side) {}
  virtual ~Policy() = default;

  virtual ActionIndex Act(std::int64_t t) = 0;
  virtual void Observe(const Observation& obs) = 0;
  virtual Phase phase() const { return Phase::kPlay; }
  // Events since the last call (phase changes, epoch ends, KS statistics).
  virtual std::vector<PolicyEvent> DrainEvents() { return {}; }

  Player side() const { return side_; }

 private:
  Player side_;
};

}  // namespace ratlearn

#endif  // RATLEARN_POLICY_H_
