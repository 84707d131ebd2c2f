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

// Match engine and value estimation.
//
// Policies are named by short spec strings:
//   fp | gfp | rm | rgfp | rrm         learning algorithms
//   const:K                            always play action K
//   br                                 constant best-reply exploiter
//   mixed:p1,p2,...                    i.i.d. from a fixed mixture
//   explore:<spec>                     <spec> from step 1 on
//   exploit:<spec>                     <spec> once the sweep is over
//   window:T1:T2:<spec>                <spec> on steps T1..T2 (T2 may be inf)
// The windowed forms play the match's compliant algorithm outside the
// window.

#ifndef RATLEARN_ARENA_H_
#define RATLEARN_ARENA_H_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratlearn/dynamics.h"
#include "ratlearn/game.h"
#include "ratlearn/policy.h"
#include "ratlearn/rational_rm.h"

namespace ratlearn {

enum class Monitoring { kPerfect, kImperfect };

// Accepts "perfect" or "imperfect"; throws std::invalid_argument otherwise.
Monitoring ParseMonitoring(const std::string& text);
std::string MonitoringName(Monitoring monitoring);

struct MatchConfig {
  explicit MatchConfig(StageGame g) : game(std::move(g)) {}

  StageGame game;
  std::string policy1 = "rgfp";
  std::string policy2 = "rgfp";
  // The compliant behaviour of windowed deviation policies.
  std::string algorithm = "rgfp";
  Monitoring monitoring = Monitoring::kPerfect;
  std::int64_t horizon = 1000;
  std::uint64_t seed = 0;
  HistoryWindow window = HistoryWindow::Full();
  double mu = 1.0;  // exploration entry for both rational algorithms
  RRmConfig rrm;
  // When false only summary statistics are kept.
  bool record_steps = true;
};

// Throws std::invalid_argument for malformed specs and DimensionError for
// actions outside the game.
std::unique_ptr<Policy> MakePolicy(const std::string& spec, Player side,
                                   const MatchConfig& config);

// Syntax check only; the game is not consulted.
bool IsValidPolicySpec(const std::string& spec);

struct StepRecord {
  std::int64_t t = 0;
  ActionIndex row;
  ActionIndex col;
  double payoff1 = 0.0;
  double payoff2 = 0.0;
  Phase phase1 = Phase::kPlay;
  Phase phase2 = Phase::kPlay;
};

struct TraceEvent {
  Player agent = Player::kOne;
  PolicyEvent event;
};

struct MatchTrace {
  std::int64_t horizon = 0;
  std::vector<StepRecord> steps;  // empty unless record_steps
  std::vector<TraceEvent> events;
  std::array<double, 2> total = {0.0, 0.0};
  std::array<double, 2> tail_total = {0.0, 0.0};
  std::int64_t tail_steps = 0;

  // (1/T) * sum of payoffs over the whole match.
  double Mean(Player p) const;
  // Average over the final ceil(T/10) steps.
  double TailMean(Player p) const;
  // First step at which `agent` reported a punish event, if any.
  std::optional<std::int64_t> PunishStart(Player agent) const;
};

// Number of steps averaged by TailMean for a horizon T.
std::int64_t TailLength(std::int64_t horizon);

// Plays exactly config.horizon steps. Deterministic in (config, seed).
MatchTrace RunMatch(const MatchConfig& config);

// Running averages (1/t) sum_{s<=t} payoff_i(s) for every recorded step.
std::vector<double> RunningAverages(const MatchTrace& trace, Player p);

struct ValueEstimate {
  double mean = 0.0;
  double tail_mean = 0.0;
  int num_seeds = 0;
  double std_err = 0.0;  // of tail_mean across seeds; 0 for a single seed
};

ValueEstimate EstimateValue(std::span<const MatchTrace> traces, Player p);

struct RatioConfig {
  explicit RatioConfig(StageGame g) : game(std::move(g)) {}

  StageGame game;
  std::string algorithm = "rgfp";
  std::string adversary = "rgfp";
  Player deviator = Player::kOne;
  Monitoring monitoring = Monitoring::kPerfect;
  std::int64_t horizon = 100000;
  int seeds = 50;
  std::uint64_t base_seed = 0;  // seed i runs with base_seed + i
  HistoryWindow window = HistoryWindow::Full();
  double mu = 1.0;
  RRmConfig rrm;
  int jobs = 1;
};

struct RatioResult {
  double ratio = 0.0;
  double ratio_stderr = 0.0;
  ValueEstimate self_play;  // the deviator seat in algorithm self-play
  ValueEstimate deviation;  // the deviator seat playing the adversary
  // Per-seed summaries (no step records).
  std::vector<MatchTrace> self_play_traces;
  std::vector<MatchTrace> deviation_traces;
};

// U_dev(adversary, algorithm) / U_dev(algorithm, algorithm) from tail means
// over the same seed set. Throws std::invalid_argument unless the game is
// strictly positive and std::domain_error if the self-play estimate is not
// positive.
RatioResult RationalityRatio(const RatioConfig& config);

// One result per adversary, all sharing a single self-play estimate;
// config.adversary is ignored.
std::vector<RatioResult> RationalityRatios(
    const RatioConfig& config, std::span<const std::string> adversaries);

struct WorstCase {
  double ratio = 0.0;
  std::size_t game_index = 0;
  std::size_t adversary_index = 0;
};

// Maximum RationalityRatio over games x adversaries, using `base` for the
// remaining settings.
WorstCase WorstCaseRatio(std::span<const StageGame> games,
                         std::span<const std::string> adversaries,
                         const RatioConfig& base);

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void ParallelFor(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace ratlearn

#endif  // RATLEARN_ARENA_H_
