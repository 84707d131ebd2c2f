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

// Rational regret matching.
//
// Play is organised in epochs. Epochs 1..rows*cols last one iteration each
// and sweep the payoff cells in row-major order; each agent picks its
// action by regret matching on a two-entry exploration matrix against the
// previous joint action. Later epochs t last N_t iterations. At the start
// of such an epoch both regret-matching distributions (own, and the model
// of the opponent) are frozen; own actions are sampled i.i.d. from the
// frozen distribution, and at the end the opponent's empirical CDF is
// compared with its modelled CDF. A Kolmogorov-Smirnov distance above
// eps_t = 1/t starts punishment.

#ifndef RATLEARN_RATIONAL_RM_H_
#define RATLEARN_RATIONAL_RM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ratlearn/dynamics.h"
#include "ratlearn/policy.h"
#include "ratlearn/punishment.h"

namespace ratlearn {

struct RRmConfig {
  double delta = 0.01;
  double c1 = 9.0 / 8.0;
  double c2 = 8.0;
  double mu = 1.0;
  double nu = 1.0;

  // Throws std::invalid_argument on delta outside (0,1), c1 <= 0, c2 <= 1,
  // mu <= 0 or nu <= 0.
  void Validate() const;
  // The union-bound constraint 2 >= c2 * t^(2 c1 - 1) used to derive the
  // 1 - delta guarantee. The default constants violate it; callers may warn.
  bool ProofConstraintHolds(std::int64_t t) const;
};

// eps_t = 1 / t.
double EpochEpsilon(std::int64_t t);

// N_t = ceil(c1 * ln(c2 t / delta) / eps_t^2). Throws std::domain_error if
// c2 t / delta <= 1.
std::int64_t EpochLength(std::int64_t t, const RRmConfig& config);

// Exploration matrix for epoch t: mu at (j1, k1) and, on the first epoch of
// a sweep row (t = (q-1)*cols + 1), nu at (q, cols).
Matrix RRmExplorationMatrix(std::int64_t t, int rows, int cols, double mu,
                            double nu);

// Regret matching on the exploration matrix `e` against `prev_joint`; a
// point mass on the agent's previous action when no regret is positive.
MixedStrategy ExplorationDistribution(
    const Matrix& e, std::pair<ActionIndex, ActionIndex> prev_joint,
    Axis axis);

struct EmpiricalCdf {
  std::vector<double> cdf;  // cdf[k-1] = fraction of actions <= k
};

// Throws std::invalid_argument on an empty sample.
EmpiricalCdf MakeEmpiricalCdf(std::span<const ActionIndex> actions,
                              int num_actions);
EmpiricalCdf MakeEmpiricalCdf(std::span<const std::int64_t> counts);

// sup_x |F_model(x) - F_empirical(x)|; for step functions on the action
// indices the supremum is attained at an index.
double KsStatistic(const MixedStrategy& model, const EmpiricalCdf& empirical);

// True means "deviation detected": statistic strictly greater than eps_t.
bool DeviationDetected(double ks_statistic, std::int64_t t);
bool DeviationTest(const MixedStrategy& model,
                   std::span<const ActionIndex> actions, std::int64_t t);

struct EpochRecord {
  std::int64_t epoch = 0;
  std::int64_t first_step = 0;
  std::int64_t length = 0;
  MixedStrategy self;
  std::optional<MixedStrategy> opponent_model;
  std::optional<double> ks;  // set when the epoch completed and was tested
};

class RationalRmPolicy : public Policy {
 public:
  RationalRmPolicy(Player side, int rows, int cols, RRmConfig config,
                   RandomStream rng);

  ActionIndex Act(std::int64_t t) override;
  void Observe(const Observation& obs) override;
  Phase phase() const override { return phase_; }
  std::vector<PolicyEvent> DrainEvents() override;

  std::int64_t epoch() const { return epoch_; }
  std::int64_t iter_in_epoch() const { return iter_in_epoch_; }
  std::int64_t epoch_length() const { return epoch_length_; }
  const PartialPayoffMatrix& own_partial() const { return own_partial_; }
  const PartialPayoffMatrix& opp_partial() const { return opp_partial_; }
  const RegretState& regret_self() const { return regret_self_; }
  const RegretState& regret_opp_model() const { return regret_opp_; }
  const std::vector<EpochRecord>& epoch_log() const { return epoch_log_; }
  std::optional<std::int64_t> punish_start() const { return punish_start_; }

 private:
  int own_actions() const;
  int opp_actions() const;
  void StartExploitEpoch(std::int64_t epoch, std::int64_t first_step);
  void EnterPunishment(std::int64_t t);

  int rows_;
  int cols_;
  RRmConfig config_;
  RandomStream rng_;
  Phase phase_ = Phase::kExplore;
  std::int64_t epoch_ = 1;
  std::int64_t iter_in_epoch_ = 0;
  std::int64_t epoch_length_ = 1;
  PartialPayoffMatrix own_partial_;
  PartialPayoffMatrix opp_partial_;
  std::optional<Matrix> own_matrix_;
  std::optional<Matrix> opp_matrix_;
  MixedStrategy frozen_self_;
  std::optional<MixedStrategy> frozen_opp_;
  std::vector<std::int64_t> opp_counts_;
  RegretState regret_self_;
  RegretState regret_opp_;
  std::pair<ActionIndex, ActionIndex> prev_joint_;
  std::vector<EpochRecord> epoch_log_;
  std::optional<PunishmentState> punishment_;
  std::optional<std::int64_t> punish_start_;
  std::vector<PolicyEvent> events_;
};

}  // namespace ratlearn

#endif  // RATLEARN_RATIONAL_RM_H_
