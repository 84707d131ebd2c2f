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

#include "ratlearn/rational_rm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ratlearn/rational_gfp.h"

namespace ratlearn {

void RRmConfig::Validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (!(c1 > 0.0)) throw std::invalid_argument("c1 must be positive");
  if (!(c2 > 1.0)) throw std::invalid_argument("c2 must exceed 1");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
}

bool RRmConfig::ProofConstraintHolds(std::int64_t t) const {
  return 2.0 >= c2 * std::pow(static_cast<double>(t), 2.0 * c1 - 1.0);
}

double EpochEpsilon(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("epoch index must be >= 1");
  return 1.0 / static_cast<double>(t);
}

std::int64_t EpochLength(std::int64_t t, const RRmConfig& config) {
  const double eps = EpochEpsilon(t);
  const double arg = config.c2 * static_cast<double>(t) / config.delta;
  if (!(arg > 1.0)) {
    throw std::domain_error("c2 * t / delta must exceed 1 for a positive "
                            "epoch length");
  }
  return static_cast<std::int64_t>(
      std::ceil(config.c1 * std::log(arg) / (eps * eps)));
}

Matrix RRmExplorationMatrix(std::int64_t t, int rows, int cols, double mu,
                            double nu) {
  const std::int64_t cells = static_cast<std::int64_t>(rows) * cols;
  if (t < 1 || t > cells) {
    throw std::out_of_range("exploration epoch " + std::to_string(t) +
                            " outside 1.." + std::to_string(cells));
  }
  const std::int64_t q = (t + cols - 1) / cols;
  const bool row_start = t == (q - 1) * cols + 1;
  const std::int64_t j1 = row_start ? std::max<std::int64_t>(1, q - 1) : q;
  const std::int64_t k1 = row_start ? 1 : t - cols * (q - 1);
  Matrix e(rows, cols);
  e(static_cast<int>(j1 - 1), static_cast<int>(k1 - 1)) = mu;
  if (row_start) e(static_cast<int>(q - 1), cols - 1) = nu;
  return e;
}

MixedStrategy ExplorationDistribution(
    const Matrix& e, std::pair<ActionIndex, ActionIndex> prev_joint,
    Axis axis) {
  const bool rows = axis == Axis::kRow;
  const ActionIndex own = rows ? prev_joint.first : prev_joint.second;
  const ActionIndex opp = rows ? prev_joint.second : prev_joint.first;
  std::vector<double> positive = InstantaneousRegret(e, own, opp, axis);
  double total = 0.0;
  for (double& r : positive) {
    r = std::max(0.0, r);
    total += r;
  }
  if (!(total > 0.0)) {
    return MixedStrategy::Pure(static_cast<int>(positive.size()), own);
  }
  for (double& r : positive) r /= total;
  return MixedStrategy(std::move(positive));
}

EmpiricalCdf MakeEmpiricalCdf(std::span<const std::int64_t> counts) {
  std::int64_t total = 0;
  for (std::int64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("empirical CDF of no samples");
  EmpiricalCdf out;
  out.cdf.reserve(counts.size());
  std::int64_t running = 0;
  for (std::int64_t c : counts) {
    running += c;
    out.cdf.push_back(static_cast<double>(running) /
                      static_cast<double>(total));
  }
  return out;
}

EmpiricalCdf MakeEmpiricalCdf(std::span<const ActionIndex> actions,
                              int num_actions) {
  std::vector<std::int64_t> counts(num_actions, 0);
  for (ActionIndex a : actions) {
    if (a.value() < 1 || a.value() > num_actions) {
      throw DimensionError("sampled action outside the action set");
    }
    ++counts[a.offset()];
  }
  return MakeEmpiricalCdf(counts);
}

double KsStatistic(const MixedStrategy& model, const EmpiricalCdf& empirical) {
  if (static_cast<int>(empirical.cdf.size()) != model.size()) {
    throw DimensionError("model and empirical CDF differ in support size");
  }
  double cumulative = 0.0;
  double stat = 0.0;
  for (int k = 0; k < model.size(); ++k) {
    cumulative += model.probs()[k];
    stat = std::max(stat, std::abs(std::min(cumulative, 1.0) -
                                   empirical.cdf[k]));
  }
  return stat;
}

bool DeviationDetected(double ks_statistic, std::int64_t t) {
  return ks_statistic > EpochEpsilon(t);
}

bool DeviationTest(const MixedStrategy& model,
                   std::span<const ActionIndex> actions, std::int64_t t) {
  return DeviationDetected(
      KsStatistic(model, MakeEmpiricalCdf(actions, model.size())), t);
}

RationalRmPolicy::RationalRmPolicy(Player side, int rows, int cols,
                                   RRmConfig config, RandomStream rng)
    : Policy(side),
      rows_(rows),
      cols_(cols),
      config_(config),
      rng_(rng),
      own_partial_(rows, cols),
      opp_partial_(rows, cols),
      regret_self_(side == Player::kOne ? rows : cols),
      regret_opp_(side == Player::kOne ? cols : rows) {
  config_.Validate();
  if (cols == 1 && rows > 1 && !(config_.nu > config_.mu)) {
    // With one column every sweep epoch is a row start and the row player
    // only advances when nu outweighs mu.
    throw std::invalid_argument(
        "single-column games need nu > mu for the exploration sweep");
  }
}

int RationalRmPolicy::own_actions() const {
  return side() == Player::kOne ? rows_ : cols_;
}

int RationalRmPolicy::opp_actions() const {
  return side() == Player::kOne ? cols_ : rows_;
}

ActionIndex RationalRmPolicy::Act(std::int64_t t) {
  const double u = rng_.Uniform(static_cast<std::uint64_t>(t));
  switch (phase_) {
    case Phase::kPunish:
      return punishment_->Strategy().Sample(u);
    case Phase::kExplore:
      if (epoch_ == 1) return ActionIndex(1);
      return ExplorationDistribution(
                 RRmExplorationMatrix(epoch_, rows_, cols_, config_.mu,
                                      config_.nu),
                 prev_joint_, AxisOf(side()))
          .Sample(u);
    default:
      return frozen_self_.Sample(u);
  }
}

void RationalRmPolicy::Observe(const Observation& obs) {
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
  const ActionIndex my_action = obs.action(me);
  const ActionIndex their_action = obs.action(them);

  switch (phase_) {
    case Phase::kPunish:
      punishment_->Observe(obs.row, obs.col, obs.payoff(them));
      return;
    case Phase::kExplore: {
      const auto cell = ExplorationCell(epoch_, rows_, cols_);
      const ActionIndex scheduled =
          them == Player::kOne ? cell.first : cell.second;
      if (their_action != scheduled) {
        EnterPunishment(obs.t);
        return;
      }
      prev_joint_ = {obs.row, obs.col};
      if (epoch_ == static_cast<std::int64_t>(rows_) * cols_) {
        StartExploitEpoch(epoch_ + 1, obs.t + 1);
      } else {
        ++epoch_;
      }
      return;
    }
    default:
      break;
  }

  ++opp_counts_[their_action.offset()];
  AccumulateRegret(regret_self_,
                   InstantaneousRegret(
                       own_matrix_ ? *own_matrix_ : own_partial_.ZeroFill(),
                       my_action, their_action, AxisOf(me)));
  if (opp_matrix_) {
    AccumulateRegret(regret_opp_,
                     InstantaneousRegret(*opp_matrix_, their_action, my_action,
                                         AxisOf(them)));
  }
  prev_joint_ = {obs.row, obs.col};
  if (++iter_in_epoch_ < epoch_length_) return;

  if (frozen_opp_) {
    const double ks = KsStatistic(*frozen_opp_, MakeEmpiricalCdf(opp_counts_));
    epoch_log_.back().ks = ks;
    events_.push_back({obs.t, "ks", ks});
    if (DeviationDetected(ks, epoch_)) {
      EnterPunishment(obs.t);
      return;
    }
  }
  StartExploitEpoch(epoch_ + 1, obs.t + 1);
}

void RationalRmPolicy::StartExploitEpoch(std::int64_t epoch,
                                         std::int64_t first_step) {
  phase_ = Phase::kExploit;
  epoch_ = epoch;
  iter_in_epoch_ = 0;
  epoch_length_ = EpochLength(epoch, config_);
  frozen_self_ = RegretMatchingDistribution(regret_self_, own_actions());
  if (opp_matrix_) {
    frozen_opp_ = RegretMatchingDistribution(regret_opp_, opp_actions());
  } else {
    frozen_opp_.reset();
  }
  opp_counts_.assign(opp_actions(), 0);
  epoch_log_.push_back(
      {epoch, first_step, epoch_length_, frozen_self_, frozen_opp_, {}});
  events_.push_back({first_step, "epoch", static_cast<double>(epoch)});
}

void RationalRmPolicy::EnterPunishment(std::int64_t t) {
  phase_ = Phase::kPunish;
  punish_start_ = t;
  punishment_.emplace(opp_partial_, Opponent(side()));
  events_.push_back({t, "punish", 0.0});
}

std::vector<PolicyEvent> RationalRmPolicy::DrainEvents() {
  std::vector<PolicyEvent> out;
  out.swap(events_);
  return out;
}

}  // namespace ratlearn
