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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "ratlearn/adversaries.h"
#include "ratlearn/catalog.h"
#include "ratlearn/rational_gfp.h"
#include "test_util.h"

namespace ratlearn {
namespace {

RationalRmPolicy Make(Player side, const StageGame& g, std::uint64_t seed = 1,
                      RRmConfig config = {}) {
  return RationalRmPolicy(side, g.rows(), g.cols(), config,
                          RandomStream(seed, PlayerNumber(side)));
}

TEST(RRmConfigTest, Validate) {
  EXPECT_NO_THROW(RRmConfig().Validate());
  RRmConfig c;
  c.delta = 1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.c1 = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.c2 = 1;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.nu = -1;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(RRmConfigTest, ProofConstraint) {
  EXPECT_FALSE(RRmConfig().ProofConstraintHolds(1));
  RRmConfig c;
  c.c1 = 0.5;
  c.c2 = 1.5;
  EXPECT_TRUE(c.ProofConstraintHolds(1));
  EXPECT_TRUE(c.ProofConstraintHolds(1000));
}

TEST(EpochScheduleTest, EpsilonAndLength) {
  EXPECT_EQ(EpochEpsilon(4), 0.25);
  EXPECT_THROW(EpochEpsilon(0), std::invalid_argument);
  EXPECT_EQ(EpochLength(5, RRmConfig()), 234);
  EXPECT_EQ(EpochLength(10, RRmConfig()), 1012);
  RRmConfig c;
  // Only reachable with constants that Validate rejects.
  c.c2 = 0.5;
  c.delta = 0.9;
  EXPECT_THROW(EpochLength(1, c), std::domain_error);
}

TEST(EpochScheduleTest, LengthIsNondecreasingProperty) {
  for (std::int64_t t = 1; t < 200; ++t) {
    EXPECT_LE(EpochLength(t, RRmConfig()), EpochLength(t + 1, RRmConfig()));
  }
}

TEST(RRmExplorationMatrixTest, TwoByTwo) {
  EXPECT_EQ(RRmExplorationMatrix(1, 2, 2, 1, 2), (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(RRmExplorationMatrix(2, 2, 2, 1, 2), (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(RRmExplorationMatrix(3, 2, 2, 1, 2), (Matrix{{1, 0}, {0, 2}}));
  EXPECT_EQ(RRmExplorationMatrix(4, 2, 2, 1, 2), (Matrix{{0, 0}, {0, 1}}));
  EXPECT_THROW(RRmExplorationMatrix(5, 2, 2, 1, 2), std::out_of_range);
}

TEST(ExplorationDistributionTest, PositiveRegretOrPointMass) {
  // Row player at (1,2) on [[1,0],[0,2]]: row 2 regret 2.
  const Matrix e{{1, 0}, {0, 2}};
  EXPECT_EQ(ExplorationDistribution(e, {ActionIndex(1), ActionIndex(2)},
                                    Axis::kRow)
                .probs(),
            (std::vector<double>{0, 1}));
  // No positive regret: stay put.
  EXPECT_EQ(ExplorationDistribution(e, {ActionIndex(2), ActionIndex(2)},
                                    Axis::kRow)
                .probs(),
            (std::vector<double>{0, 1}));
}

// Following the exploration distributions from the previous joint action
// visits every cell in row-major order, for any mu and nu with nu > mu
// when there is a single column.
TEST(ExplorationContractTest, SelfPlaySweepsEveryCell) {
  std::mt19937_64 gen(6);
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 3; ++cols) {
      for (double mu : {0.5, 1.0, 3.0}) {
        RRmConfig config;
        config.mu = mu;
        config.nu = cols == 1 ? 2 * mu : 1.0;
        const StageGame g(oracle::RandomMatrix(gen, rows, cols, 0.1, 1),
                          oracle::RandomMatrix(gen, rows, cols, 0.1, 1));
        auto p1 = Make(Player::kOne, g, 1, config);
        auto p2 = Make(Player::kTwo, g, 1, config);
        const int rc = rows * cols;
        const auto steps = testing::PlaySteps(g, p1, p2, 1, rc);
        for (int t = 1; t <= rc; ++t) {
          const auto cell = ExplorationCell(t, rows, cols);
          ASSERT_EQ(steps[t - 1].row, cell.first) << rows << "x" << cols;
          ASSERT_EQ(steps[t - 1].col, cell.second) << rows << "x" << cols;
        }
        EXPECT_TRUE(p1.own_partial().FullyKnown());
        EXPECT_EQ(p1.phase(), Phase::kExploit);
        EXPECT_EQ(p1.epoch(), rc + 1);
        EXPECT_FALSE(p1.punish_start());
      }
    }
  }
}

TEST(RationalRmTest, SingleColumnNeedsNuAboveMu) {
  EXPECT_THROW(RationalRmPolicy(Player::kOne, 3, 1, RRmConfig(),
                                RandomStream()),
               std::invalid_argument);
  RRmConfig config;
  config.nu = 2;
  EXPECT_NO_THROW(RationalRmPolicy(Player::kOne, 3, 1, config,
                                   RandomStream()));
}

TEST(KsTest, Examples) {
  const std::vector<ActionIndex> a = {ActionIndex(1), ActionIndex(1),
                                      ActionIndex(1), ActionIndex(2)};
  const EmpiricalCdf cdf = MakeEmpiricalCdf(a, 2);
  EXPECT_EQ(cdf.cdf, (std::vector<double>{0.75, 1.0}));
  EXPECT_DOUBLE_EQ(KsStatistic(MixedStrategy({0.5, 0.5}), cdf), 0.25);
  // Strictly greater than eps_t.
  EXPECT_FALSE(DeviationDetected(0.25, 4));
  EXPECT_TRUE(DeviationDetected(0.2500001, 4));
  EXPECT_FALSE(DeviationTest(MixedStrategy({0.5, 0.5}), a, 4));
  EXPECT_TRUE(DeviationTest(MixedStrategy({0.5, 0.5}), a, 5));
  EXPECT_THROW(MakeEmpiricalCdf(std::vector<std::int64_t>{0, 0}),
               std::invalid_argument);
  EXPECT_EQ(MakeEmpiricalCdf(std::vector<std::int64_t>{1, 0, 3}).cdf,
            (std::vector<double>{0.25, 0.25, 1.0}));
}

TEST(KsTest, StatisticIsSymmetricSupDistanceOracle) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> count(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> counts(4);
    for (auto& c : counts) c = count(gen);
    counts[trial % 4] += 1;
    std::vector<double> p(4);
    double s = 0;
    for (auto& x : p) s += (x = count(gen) + 1.0);
    for (auto& x : p) x /= s;
    double total = 0;
    for (auto c : counts) total += c;
    double fm = 0, fe = 0, best = 0;
    for (int k = 0; k < 4; ++k) {
      fm += p[k];
      fe += counts[k] / total;
      best = std::max(best, std::abs(fm - fe));
    }
    EXPECT_NEAR(KsStatistic(MixedStrategy(p), MakeEmpiricalCdf(counts)), best,
                1e-12);
  }
}

TEST(RationalRmTest, SelfPlayLogsEpochsWithScheduledLengths) {
  const StageGame g = MakeExploitableRmGame(4);
  auto p1 = Make(Player::kOne, g, 3);
  auto p2 = Make(Player::kTwo, g, 3);
  const std::int64_t total = 4 + EpochLength(5, RRmConfig()) +
                             EpochLength(6, RRmConfig());
  testing::PlaySteps(g, p1, p2, 1, total);
  const auto& log = p1.epoch_log();
  ASSERT_EQ(log.size(), 3u);
  EXPECT_EQ(log[0].epoch, 5);
  EXPECT_EQ(log[0].first_step, 5);
  EXPECT_EQ(log[0].length, 234);
  EXPECT_EQ(log[1].first_step, 5 + 234);
  ASSERT_TRUE(log[0].ks.has_value());
  ASSERT_TRUE(log[0].opponent_model.has_value());
  // The first exploit epoch starts from zero regret.
  EXPECT_EQ(log[0].self.probs(), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(p1.regret_self().steps, total - 4);
  EXPECT_FALSE(p1.punish_start());
  // Each agent's model of the other is the other's own distribution.
  const auto& log2 = p2.epoch_log();
  for (std::size_t i = 0; i < log.size(); ++i) {
    EXPECT_EQ(log[i].opponent_model->probs(), log2[i].self.probs());
  }
}

TEST(RationalRmTest, ConstantExploitDeviationFailsKsTest) {
  const StageGame g = MakeExploitableRmGame(4);
  auto r2 = Make(Player::kTwo, g);
  auto r1 = Make(Player::kOne, g);
  testing::PlaySteps(g, r1, r2, 1, 4);
  ConstantActionPolicy dev(Player::kOne, ActionIndex(1));
  testing::PlaySteps(g, dev, r2, 5, 4 + 234);
  ASSERT_TRUE(r2.punish_start());
  EXPECT_EQ(*r2.punish_start(), 4 + 234);
  ASSERT_TRUE(r2.epoch_log().back().ks.has_value());
  EXPECT_DOUBLE_EQ(*r2.epoch_log().back().ks, 0.5);
  bool saw_punish = false;
  for (const auto& e : r2.DrainEvents()) saw_punish |= e.kind == "punish";
  EXPECT_TRUE(saw_punish);
}

TEST(RationalRmTest, OffScheduleExploreActionIsPunished) {
  const StageGame g = MakeExploitableRmGame(4);
  auto r2 = Make(Player::kTwo, g);
  ConstantActionPolicy dev(Player::kOne, ActionIndex(1));
  // Epoch 3 schedules row 2.
  testing::PlaySteps(g, dev, r2, 1, 5);
  ASSERT_TRUE(r2.punish_start());
  EXPECT_EQ(*r2.punish_start(), 3);
}

TEST(RationalRmTest, ImperfectMonitoringHasNoOpponentModel) {
  const StageGame g = MakeExploitableRmGame(4);
  auto r1 = Make(Player::kOne, g);
  auto r2 = Make(Player::kTwo, g);
  testing::PlaySteps(g, r1, r2, 1, 4, /*perfect=*/false);
  ConstantActionPolicy dev(Player::kOne, ActionIndex(1));
  testing::PlaySteps(g, dev, r2, 5, 600, /*perfect=*/false);
  EXPECT_FALSE(r2.punish_start());
  EXPECT_FALSE(r2.epoch_log().front().opponent_model.has_value());
  EXPECT_FALSE(r2.epoch_log().front().ks.has_value());
}

}  // namespace
}  // namespace ratlearn
