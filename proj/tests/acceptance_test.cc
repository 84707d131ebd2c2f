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


// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "ratlearn/arena.h"
#include "ratlearn/baselines.h"
#include "ratlearn/catalog.h"
#include "ratlearn/minimax.h"
#include "ratlearn/rational_gfp.h"
#include "ratlearn/rational_rm.h"
#include "test_util.h"

namespace ratlearn {
namespace {

constexpr std::int64_t kHorizon = 100000;
constexpr int kSeeds = 50;
constexpr double kGameC = 4.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string Fmt(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

bool Within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

Outcome FpExploit() {
  Stopwatch clock;
  RatioConfig cfg(MakeExploitableFpGame(kGameC));
  cfg.algorithm = "fp";
  cfg.adversary = "const:3";
  cfg.deviator = Player::kTwo;
  cfg.horizon = kHorizon;
  cfg.seeds = kSeeds;
  const RatioResult r = RationalityRatio(cfg);
  const double secs = clock.Seconds();
  Outcome o;
  o.pass = Within(r.ratio, kGameC + 1, 0.02) &&
           Within(r.self_play.tail_mean, 10.0, 0.02) && secs < 10.0;
  o.detail = "ratio " + Fmt(r.ratio) + ", self-play " +
             Fmt(r.self_play.tail_mean) + ", " + Fmt(secs, 3) + " s";
  return o;
}

Outcome RmExploit() {
  Stopwatch clock;
  RatioConfig cfg(MakeExploitableRmGame(kGameC));
  cfg.algorithm = "rm";
  cfg.adversary = "const:1";
  cfg.deviator = Player::kOne;
  cfg.horizon = kHorizon;
  cfg.seeds = kSeeds;
  const RatioResult r = RationalityRatio(cfg);
  const double secs = clock.Seconds();
  Outcome o;
  o.pass = Within(r.ratio, kGameC + 1, 0.03) && secs < 30.0;
  o.detail = "ratio " + Fmt(r.ratio) + " +/- " + Fmt(r.ratio_stderr) + ", " +
             Fmt(secs, 3) + " s";
  return o;
}

// Constant actions, the best-reply exploiter, five random stationary
// mixtures, and the constant and exploiter policies switched on either from
// the first step or once the sweep is over.
std::vector<std::string> AdversarySuite(const StageGame& game,
                                        Player deviator, std::uint64_t seed) {
  const int n = game.num_actions(deviator);
  std::vector<std::string> base;
  for (int a = 1; a <= n; ++a) base.push_back("const:" + std::to_string(a));
  base.push_back("br");
  std::vector<std::string> suite = base;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> weight(1, 9);
  for (int k = 0; k < 5; ++k) {
    std::vector<int> w(n);
    int total = 0;
    for (int& x : w) total += (x = weight(gen));
    std::ostringstream spec;
    spec.precision(17);
    spec << "mixed:";
    for (int i = 0; i < n; ++i) {
      spec << (i ? "," : "") << static_cast<double>(w[i]) / total;
    }
    suite.push_back(spec.str());
  }
  for (const std::string& b : base) {
    suite.push_back("explore:" + b);
    suite.push_back("exploit:" + b);
  }
  return suite;
}

struct NamedGame {
  std::string name;
  StageGame game;
};

std::vector<NamedGame> ConstructedGames() {
  return {{"fp-game", MakeExploitableFpGame(kGameC)},
          {"rm-game", MakeExploitableRmGame(kGameC)}};
}

Outcome RationalitySuite(const std::string& algorithm, double tolerance,
                         double time_limit) {
  Stopwatch clock;
  Outcome o;
  double worst = 0.0;
  std::string worst_label;
  int cases = 0, skipped = 0;
  for (const NamedGame& g : ConstructedGames()) {
    for (Player deviator : {Player::kOne, Player::kTwo}) {
      RatioConfig cfg(g.game);
      cfg.algorithm = algorithm;
      cfg.deviator = deviator;
      cfg.horizon = kHorizon;
      cfg.seeds = kSeeds;
      const std::vector<std::string> advs =
          AdversarySuite(g.game, deviator, 1000 + PlayerNumber(deviator));
      const std::vector<RatioResult> results = RationalityRatios(cfg, advs);
      if (!CheckPunishmentCondition(g.game, deviator,
                                results.front().self_play.tail_mean)) {
        ++skipped;
        continue;
      }
      for (std::size_t i = 0; i < advs.size(); ++i) {
        ++cases;
        if (results[i].ratio > worst) {
          worst = results[i].ratio;
          worst_label = g.name + " deviator " +
                        std::to_string(PlayerNumber(deviator)) + " " +
                        advs[i];
        }
      }
    }
  }
  const double secs = clock.Seconds();
  o.pass = cases > 0 && worst <= 1.0 + tolerance && secs < time_limit;
  o.detail = "worst ratio " + Fmt(worst) + " (" + worst_label + ") over " +
             std::to_string(cases) + " cases, " + std::to_string(skipped) +
             " settings skipped by the minimax condition, " + Fmt(secs, 3) +
             " s";
  return o;
}

Outcome RrmFalsePositives() {
  const RRmConfig rrm;
  int runs = 0, punished = 0;
  for (const NamedGame& g : ConstructedGames()) {
    std::vector<MatchTrace> traces(200);
    ParallelFor(200, 1, [&](int i) {
      MatchConfig cfg(g.game);
      cfg.policy1 = cfg.policy2 = cfg.algorithm = "rrm";
      cfg.horizon = kHorizon;
      cfg.seed = 5000 + i;
      cfg.record_steps = false;
      traces[i] = RunMatch(cfg);
    });
    for (const MatchTrace& t : traces) {
      ++runs;
      punished += t.PunishStart(Player::kOne) || t.PunishStart(Player::kTwo);
    }
  }
  const double rate = static_cast<double>(punished) / runs;
  Outcome o;
  o.pass = rate <= rrm.delta + 0.02;
  o.detail = std::to_string(punished) + "/" + std::to_string(runs) +
             " self-play runs punished (rate " + Fmt(rate) + ")";
  return o;
}

Outcome ExplorationContract() {
  Outcome o;
  int sweeps = 0, deviations = 0, misses = 0, false_alarms = 0;
  std::mt19937_64 gen(77);
  const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {3, 3}};
  for (const std::string algorithm : {"rgfp", "rrm"}) {
    for (auto [rows, cols] : shapes) {
      const StageGame game(oracle::RandomMatrix(gen, rows, cols, 0.1, 10),
                           oracle::RandomMatrix(gen, rows, cols, 0.1, 10));
      const int rc = rows * cols;
      MatchConfig self(game);
      self.policy1 = self.policy2 = self.algorithm = algorithm;
      self.horizon = rc;
      const MatchTrace trace = RunMatch(self);
      ++sweeps;
      for (int t = 1; t <= rc; ++t) {
        const auto cell = ExplorationCell(t, rows, cols);
        const StepRecord& s = trace.steps[t - 1];
        if (s.row != cell.first || s.col != cell.second) {
          o.pass = false;
          o.detail += algorithm + " sweep off schedule; ";
        }
      }
      if (trace.PunishStart(Player::kOne) ||
          trace.PunishStart(Player::kTwo)) {
        ++false_alarms;
      }
      // Every single-step deviation at every sweep step.
      for (Player deviator : {Player::kOne, Player::kTwo}) {
        const Player watcher = Opponent(deviator);
        for (int t = 1; t <= rc; ++t) {
          const auto cell = ExplorationCell(t, rows, cols);
          const ActionIndex scheduled =
              deviator == Player::kOne ? cell.first : cell.second;
          for (int a = 1; a <= game.num_actions(deviator); ++a) {
            if (ActionIndex(a) == scheduled) continue;
            MatchConfig cfg(game);
            cfg.algorithm = algorithm;
            const std::string dev = "window:" + std::to_string(t) + ":" +
                                    std::to_string(t) + ":const:" +
                                    std::to_string(a);
            cfg.policy1 = deviator == Player::kOne ? dev : algorithm;
            cfg.policy2 = deviator == Player::kTwo ? dev : algorithm;
            cfg.horizon = rc + 1;
            const MatchTrace m = RunMatch(cfg);
            ++deviations;
            const auto start = m.PunishStart(watcher);
            if (!start || *start > t) ++misses;
            if (start && *start < t) ++false_alarms;
          }
        }
      }
    }
  }
  o.pass = o.pass && misses == 0 && false_alarms == 0;
  o.detail += std::to_string(sweeps) + " sweeps, " +
              std::to_string(deviations) + " deviations, " +
              std::to_string(misses) + " misses, " +
              std::to_string(false_alarms) + " false alarms";
  return o;
}

Outcome MinimaxKernel() {
  Outcome o;
  std::mt19937_64 gen(4242);
  std::uniform_int_distribution<int> dim(1, 4);
  double worst_grid = 0.0, worst_vertex = 0.0;
  bool pure_bound = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = oracle::RandomMatrix(gen, dim(gen), dim(gen), 0, 10);
    for (Player target : {Player::kOne, Player::kTwo}) {
      const bool row = target == Player::kOne;
      const double v = MixedMinimax(m, target).value;
      worst_grid = std::max(
          worst_grid, std::abs(v - oracle::GridMinimaxValue(m, row, 20, 3)));
      worst_vertex = std::max(
          worst_vertex, std::abs(v - oracle::VertexMinimaxValue(m, row)));
      pure_bound &= v <= PureMinimaxValue(m, target) + kValueTolerance;
    }
  }
  const double pennies =
      MixedMinimax(Matrix{{1, -1}, {-1, 1}}, Player::kOne).value;
  o.pass = worst_grid <= 1e-3 && pure_bound && pennies == 0.0;
  o.detail = "max |grid - lp| " + Fmt(worst_grid) + ", max |vertex - lp| " +
             Fmt(worst_vertex) + ", mixed <= pure " +
             (pure_bound ? "holds" : "violated") + ", matching pennies " +
             Fmt(pennies);
  return o;
}

Outcome MonitoringNegative() {
  const StageGame g2 = MakeMonitoringPair(kGameC).second;
  RatioConfig cfg(g2);
  cfg.algorithm = "rgfp";
  cfg.adversary = "exploit:const:2";
  cfg.deviator = Player::kTwo;
  cfg.horizon = kHorizon;
  cfg.seeds = kSeeds;
  cfg.monitoring = Monitoring::kImperfect;
  const double imperfect = RationalityRatio(cfg).ratio;
  cfg.monitoring = Monitoring::kPerfect;
  const double perfect = RationalityRatio(cfg).ratio;
  Outcome o;
  o.pass = imperfect >= 4.5 && perfect <= 1.02;
  o.detail = "imperfect " + Fmt(imperfect) + ", perfect " + Fmt(perfect);
  return o;
}

std::vector<double> Column(const std::vector<testing::Step>& steps, bool row) {
  std::vector<double> out;
  for (const auto& s : steps) out.push_back((row ? s.row : s.col).value());
  return out;
}

Outcome SelfPlayEquivalence() {
  Outcome o;
  std::mt19937_64 gen(9001);
  std::uniform_int_distribution<int> dim(1, 4);
  int gfp_mismatch = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = dim(gen), cols = dim(gen);
    const StageGame g(oracle::RandomMatrix(gen, rows, cols, 0.1, 10),
                      oracle::RandomMatrix(gen, rows, cols, 0.1, 10));
    RGfpConfig rc_cfg;
    if (trial % 4 == 3) rc_cfg.window = HistoryWindow::Sliding(1 + trial % 7);
    RationalGfpPolicy r1(Player::kOne, rows, cols, rc_cfg,
                         RandomStream(trial, 1));
    RationalGfpPolicy r2(Player::kTwo, rows, cols, rc_cfg,
                         RandomStream(trial, 2));
    const int rc = rows * cols;
    const int post = 2000;
    const auto steps = testing::PlaySteps(g, r1, r2, 1, rc + post);
    std::vector<int> pr, pc;
    for (int t = 0; t < rc; ++t) {
      pr.push_back(steps[t].row.value());
      pc.push_back(steps[t].col.value());
    }
    const History prior = History::FromActions(pr, pc);
    FictitiousPlayPolicy f1(Player::kOne, g.payoff(Player::kOne),
                            rc_cfg.window, prior);
    FictitiousPlayPolicy f2(Player::kTwo, g.payoff(Player::kTwo),
                            rc_cfg.window, prior);
    const auto fp = testing::PlaySteps(g, f1, f2, rc + 1, rc + post);
    const std::vector<testing::Step> tail(steps.begin() + rc, steps.end());
    if (Column(tail, true) != Column(fp, true) ||
        Column(tail, false) != Column(fp, false)) {
      ++gfp_mismatch;
    }
  }

  int rm_mismatch = 0, epochs_checked = 0;
  const StageGame games[] = {MakeExploitableRmGame(kGameC),
                             MakeExploitableFpGame(kGameC)};
  for (int seed = 0; seed < 50; ++seed) {
    const StageGame& g = games[seed % 2];
    RationalRmPolicy p1(Player::kOne, g.rows(), g.cols(), RRmConfig(),
                        RandomStream(seed, 1));
    RationalRmPolicy p2(Player::kTwo, g.rows(), g.cols(), RRmConfig(),
                        RandomStream(seed, 2));
    const std::int64_t horizon = 20000;
    const auto steps = testing::PlaySteps(g, p1, p2, 1, horizon);
    const std::int64_t rc = g.rows() * g.cols();
    // Regret matching on regrets accumulated over the exploit steps that
    // precede each epoch.
    for (const RationalRmPolicy* p : {&p1, &p2}) {
      const Player me = p->side();
      const Axis axis = AxisOf(me);
      RegretState regret(g.num_actions(me));
      std::int64_t next = rc + 1;
      for (const EpochRecord& rec : p->epoch_log()) {
        for (; next < rec.first_step; ++next) {
          const auto& s = steps[next - 1];
          const ActionIndex own = me == Player::kOne ? s.row : s.col;
          const ActionIndex opp = me == Player::kOne ? s.col : s.row;
          AccumulateRegret(regret, InstantaneousRegret(g.payoff(me), own, opp,
                                                       axis));
        }
        ++epochs_checked;
        if (RegretMatchingDistribution(regret, g.num_actions(me)).probs() !=
            rec.self.probs()) {
          ++rm_mismatch;
        }
      }
    }
  }
  o.pass = gfp_mismatch == 0 && rm_mismatch == 0 && epochs_checked > 0;
  o.detail = "R-GFP trace mismatches " + std::to_string(gfp_mismatch) +
             "/100 games; R-RM distribution mismatches " +
             std::to_string(rm_mismatch) + "/" +
             std::to_string(epochs_checked) + " epochs";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace ratlearn

int main() {
  using namespace ratlearn;
  const Criterion criteria[] = {
      {"fp-exploitable", FpExploit},
      {"rm-exploitable", RmExploit},
      {"rgfp-rational",
       [] { return RationalitySuite("rgfp", 0.02, 120.0); }},
      {"rrm-rational", [] {
         Stopwatch clock;
         Outcome ratio = RationalitySuite("rrm", 0.03, 600.0);
         Outcome fp = RrmFalsePositives();
         Outcome o;
         o.pass = ratio.pass && fp.pass && clock.Seconds() < 600.0;
         o.detail = ratio.detail + "; " + fp.detail + "; total " +
                    Fmt(clock.Seconds(), 3) + " s";
         return o;
       }},
      {"exploration-contract", ExplorationContract},
      {"minimax-kernel", MinimaxKernel},
      {"monitoring-negative", MonitoringNegative},
      {"self-play-equivalence", SelfPlayEquivalence},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
