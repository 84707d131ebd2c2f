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

#include "ratlearn/arena.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ratlearn/adversaries.h"
#include "ratlearn/baselines.h"
#include "ratlearn/rational_gfp.h"

namespace ratlearn {
namespace {

constexpr std::string_view kExplorePrefix = "explore:";
constexpr std::string_view kExploitPrefix = "exploit:";
constexpr std::string_view kWindowPrefix = "window:";
constexpr std::string_view kConstPrefix = "const:";
constexpr std::string_view kMixedPrefix = "mixed:";

bool StartsWith(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::invalid_argument BadSpec(const std::string& spec) {
  return std::invalid_argument("unknown policy spec '" + spec + "'");
}

// Whole-string integer parse; std::nullopt on any trailing text.
std::optional<std::int64_t> ParseInt(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

std::vector<double> ParseProbabilities(const std::string& text,
                                       const std::string& spec) {
  std::vector<double> probs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      probs.push_back(std::stod(item, &used));
      if (used != item.size()) throw BadSpec(spec);
    } catch (const std::logic_error&) {
      throw BadSpec(spec);
    }
    pos = comma + 1;
  }
  return probs;
}

struct WindowSpec {
  DeviationWindow window;
  std::string inner;
};

// Splits the windowed forms; std::nullopt when `spec` is not windowed.
std::optional<WindowSpec> SplitWindow(const std::string& spec,
                                      std::int64_t sweep_length) {
  if (StartsWith(spec, kExplorePrefix)) {
    return WindowSpec{{0, std::nullopt}, spec.substr(kExplorePrefix.size())};
  }
  if (StartsWith(spec, kExploitPrefix)) {
    return WindowSpec{{sweep_length + 1, std::nullopt},
                      spec.substr(kExploitPrefix.size())};
  }
  if (!StartsWith(spec, kWindowPrefix)) return std::nullopt;
  const std::string rest = spec.substr(kWindowPrefix.size());
  const std::size_t c1 = rest.find(':');
  const std::size_t c2 =
      c1 == std::string::npos ? std::string::npos : rest.find(':', c1 + 1);
  if (c2 == std::string::npos) throw BadSpec(spec);
  const auto start = ParseInt(rest.substr(0, c1));
  const std::string end_text = rest.substr(c1 + 1, c2 - c1 - 1);
  std::optional<std::int64_t> end;
  if (end_text != "inf") {
    end = ParseInt(end_text);
    if (!end) throw BadSpec(spec);
  }
  if (!start || *start < 0 || (end && *end < *start)) throw BadSpec(spec);
  return WindowSpec{{*start, end}, rest.substr(c2 + 1)};
}

bool IsAlgorithm(const std::string& spec) {
  return spec == "fp" || spec == "gfp" || spec == "rm" || spec == "rgfp" ||
         spec == "rrm";
}

std::unique_ptr<Policy> MakeBasePolicy(const std::string& spec, Player side,
                                       const MatchConfig& config,
                                       RandomStream rng) {
  const StageGame& game = config.game;
  const int n = game.num_actions(side);
  if (spec == "fp") {
    return std::make_unique<FictitiousPlayPolicy>(side, game.payoff(side),
                                                  HistoryWindow::Full());
  }
  if (spec == "gfp") {
    return std::make_unique<FictitiousPlayPolicy>(side, game.payoff(side),
                                                  config.window);
  }
  if (spec == "rm") {
    return std::make_unique<RegretMatchingPolicy>(side, game.payoff(side), rng);
  }
  if (spec == "rgfp") {
    return std::make_unique<RationalGfpPolicy>(
        side, game.rows(), game.cols(), RGfpConfig{config.mu, config.window},
        rng);
  }
  if (spec == "rrm") {
    RRmConfig rrm = config.rrm;
    rrm.mu = config.mu;
    return std::make_unique<RationalRmPolicy>(side, game.rows(), game.cols(),
                                              rrm, rng);
  }
  if (spec == "br") {
    return std::make_unique<ConstantActionPolicy>(
        side, BrExploiterAction(game, side));
  }
  if (StartsWith(spec, kConstPrefix)) {
    const auto k = ParseInt(spec.substr(kConstPrefix.size()));
    if (!k) throw BadSpec(spec);
    if (*k < 1 || *k > n) {
      throw DimensionError("action " + std::to_string(*k) + " outside 1.." +
                           std::to_string(n) + " for agent " +
                           std::to_string(PlayerNumber(side)));
    }
    return std::make_unique<ConstantActionPolicy>(
        side, ActionIndex(static_cast<int>(*k)));
  }
  if (StartsWith(spec, kMixedPrefix)) {
    std::vector<double> probs =
        ParseProbabilities(spec.substr(kMixedPrefix.size()), spec);
    if (static_cast<int>(probs.size()) != n) {
      throw DimensionError("mixture over " + std::to_string(probs.size()) +
                           " actions for an agent with " + std::to_string(n));
    }
    return std::make_unique<StationaryMixedPolicy>(
        side, MixedStrategy(std::move(probs)), rng);
  }
  throw BadSpec(spec);
}

std::unique_ptr<Policy> MakePolicyImpl(const std::string& spec, Player side,
                                       const MatchConfig& config,
                                       RandomStream rng) {
  const std::int64_t sweep =
      static_cast<std::int64_t>(config.game.rows()) * config.game.cols();
  if (auto windowed = SplitWindow(spec, sweep)) {
    if (!IsAlgorithm(config.algorithm)) {
      throw std::invalid_argument("compliant algorithm '" + config.algorithm +
                                  "' is not a learning algorithm");
    }
    auto compliant = MakeBasePolicy(config.algorithm, side, config, rng);
    auto deviant =
        MakePolicyImpl(windowed->inner, side, config, rng.Substream(1));
    return std::make_unique<WindowedDeviationPolicy>(
        std::move(compliant), std::move(deviant), windowed->window);
  }
  return MakeBasePolicy(spec, side, config, rng);
}

Observation ObservationFor(Player p, const JointOutcome& out, std::int64_t t,
                           Monitoring monitoring) {
  Observation obs{t, out.row, out.col, out.payoff1, out.payoff2};
  if (monitoring == Monitoring::kImperfect) {
    if (p == Player::kOne) {
      obs.payoff2.reset();
    } else {
      obs.payoff1.reset();
    }
  }
  return obs;
}

void CheckAction(ActionIndex a, int n, Player p) {
  if (a.value() < 1 || a.value() > n) {
    throw DimensionError("agent " + std::to_string(PlayerNumber(p)) +
                         " played action " + std::to_string(a.value()) +
                         " outside 1.." + std::to_string(n));
  }
}

int Seat(Player p) { return p == Player::kOne ? 0 : 1; }

}  // namespace

Monitoring ParseMonitoring(const std::string& text) {
  if (text == "perfect") return Monitoring::kPerfect;
  if (text == "imperfect") return Monitoring::kImperfect;
  throw std::invalid_argument("monitoring must be 'perfect' or 'imperfect', "
                              "got '" + text + "'");
}

std::string MonitoringName(Monitoring monitoring) {
  return monitoring == Monitoring::kPerfect ? "perfect" : "imperfect";
}

std::unique_ptr<Policy> MakePolicy(const std::string& spec, Player side,
                                   const MatchConfig& config) {
  return MakePolicyImpl(spec, side, config,
                        RandomStream(config.seed, PlayerNumber(side)));
}

bool IsValidPolicySpec(const std::string& spec) {
  try {
    if (auto windowed = SplitWindow(spec, 1)) {
      return IsValidPolicySpec(windowed->inner);
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (IsAlgorithm(spec) || spec == "br") return true;
  if (StartsWith(spec, kConstPrefix)) {
    return ParseInt(spec.substr(kConstPrefix.size())).has_value();
  }
  if (StartsWith(spec, kMixedPrefix)) {
    try {
      ParseProbabilities(spec.substr(kMixedPrefix.size()), spec);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return false;
}

std::int64_t TailLength(std::int64_t horizon) {
  return std::max<std::int64_t>(1, (horizon + 9) / 10);
}

double MatchTrace::Mean(Player p) const {
  return horizon > 0 ? total[Seat(p)] / static_cast<double>(horizon) : 0.0;
}

double MatchTrace::TailMean(Player p) const {
  return tail_steps > 0
             ? tail_total[Seat(p)] / static_cast<double>(tail_steps)
             : 0.0;
}

std::optional<std::int64_t> MatchTrace::PunishStart(Player agent) const {
  for (const TraceEvent& e : events) {
    if (e.agent == agent && e.event.kind == "punish") return e.event.t;
  }
  return std::nullopt;
}

MatchTrace RunMatch(const MatchConfig& config) {
  if (config.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const StageGame& game = config.game;
  std::unique_ptr<Policy> p1 = MakePolicy(config.policy1, Player::kOne, config);
  std::unique_ptr<Policy> p2 = MakePolicy(config.policy2, Player::kTwo, config);

  MatchTrace trace;
  trace.horizon = config.horizon;
  trace.tail_steps = TailLength(config.horizon);
  const std::int64_t tail_start = config.horizon - trace.tail_steps + 1;
  if (config.record_steps) trace.steps.reserve(config.horizon);

  for (std::int64_t t = 1; t <= config.horizon; ++t) {
    const ActionIndex row = p1->Act(t);
    const ActionIndex col = p2->Act(t);
    CheckAction(row, game.rows(), Player::kOne);
    CheckAction(col, game.cols(), Player::kTwo);
    const Phase phase1 = p1->phase();
    const Phase phase2 = p2->phase();
    const JointOutcome out = Play(game, row, col);

    p1->Observe(ObservationFor(Player::kOne, out, t, config.monitoring));
    p2->Observe(ObservationFor(Player::kTwo, out, t, config.monitoring));
    for (PolicyEvent& e : p1->DrainEvents()) {
      trace.events.push_back({Player::kOne, std::move(e)});
    }
    for (PolicyEvent& e : p2->DrainEvents()) {
      trace.events.push_back({Player::kTwo, std::move(e)});
    }

    trace.total[0] += out.payoff1;
    trace.total[1] += out.payoff2;
    if (t >= tail_start) {
      trace.tail_total[0] += out.payoff1;
      trace.tail_total[1] += out.payoff2;
    }
    if (config.record_steps) {
      trace.steps.push_back(
          {t, row, col, out.payoff1, out.payoff2, phase1, phase2});
    }
  }
  return trace;
}

std::vector<double> RunningAverages(const MatchTrace& trace, Player p) {
  std::vector<double> out;
  out.reserve(trace.steps.size());
  double sum = 0.0;
  for (const StepRecord& s : trace.steps) {
    sum += p == Player::kOne ? s.payoff1 : s.payoff2;
    out.push_back(sum / static_cast<double>(s.t));
  }
  return out;
}

ValueEstimate EstimateValue(std::span<const MatchTrace> traces, Player p) {
  if (traces.empty()) throw std::invalid_argument("no traces to estimate");
  ValueEstimate est;
  est.num_seeds = static_cast<int>(traces.size());
  for (const MatchTrace& tr : traces) {
    est.mean += tr.Mean(p);
    est.tail_mean += tr.TailMean(p);
  }
  est.mean /= est.num_seeds;
  est.tail_mean /= est.num_seeds;
  if (est.num_seeds > 1) {
    double ss = 0.0;
    for (const MatchTrace& tr : traces) {
      const double d = tr.TailMean(p) - est.tail_mean;
      ss += d * d;
    }
    est.std_err = std::sqrt(ss / (est.num_seeds - 1) / est.num_seeds);
  }
  return est;
}

void ParallelFor(int n, int jobs, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(jobs, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

MatchConfig RatioMatch(const RatioConfig& config,
                       const std::string& deviator_spec, std::uint64_t seed) {
  MatchConfig m(config.game);
  m.algorithm = config.algorithm;
  const bool one = config.deviator == Player::kOne;
  m.policy1 = one ? deviator_spec : config.algorithm;
  m.policy2 = one ? config.algorithm : deviator_spec;
  m.monitoring = config.monitoring;
  m.horizon = config.horizon;
  m.seed = seed;
  m.window = config.window;
  m.mu = config.mu;
  m.rrm = config.rrm;
  m.record_steps = false;
  return m;
}

void FinishRatio(RatioResult& result, Player deviator) {
  result.self_play = EstimateValue(result.self_play_traces, deviator);
  result.deviation = EstimateValue(result.deviation_traces, deviator);
  const double s = result.self_play.tail_mean;
  const double d = result.deviation.tail_mean;
  if (!(s > 0.0)) {
    throw std::domain_error("self-play value estimate is not positive");
  }
  result.ratio = d / s;
  // Delta method, treating the two estimates as independent.
  const double rel_d = d != 0.0 ? result.deviation.std_err / d : 0.0;
  const double rel_s = result.self_play.std_err / s;
  result.ratio_stderr =
      std::abs(result.ratio) * std::sqrt(rel_d * rel_d + rel_s * rel_s);
}

}  // namespace

std::vector<RatioResult> RationalityRatios(
    const RatioConfig& config, std::span<const std::string> adversaries) {
  if (!config.game.strictly_positive()) {
    throw std::invalid_argument(
        "rationality ratios need a game with strictly positive payoffs");
  }
  if (config.seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  const int seeds = config.seeds;
  const int num_adv = static_cast<int>(adversaries.size());

  std::vector<MatchTrace> self_play(seeds);
  std::vector<RatioResult> results(num_adv);
  for (RatioResult& r : results) r.deviation_traces.resize(seeds);

  // Job j < seeds is self-play for seed j; the rest are (adversary, seed)
  // pairs. Adversaries equal to the algorithm reuse the self-play runs.
  ParallelFor(seeds * (num_adv + 1), config.jobs, [&](int job) {
    const int slot = job / seeds;
    const int i = job % seeds;
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
    if (slot == 0) {
      self_play[i] = RunMatch(RatioMatch(config, config.algorithm, seed));
      return;
    }
    const std::string& adversary = adversaries[slot - 1];
    if (adversary == config.algorithm) return;
    results[slot - 1].deviation_traces[i] =
        RunMatch(RatioMatch(config, adversary, seed));
  });

  for (int a = 0; a < num_adv; ++a) {
    RatioResult& r = results[a];
    r.self_play_traces = self_play;
    if (adversaries[a] == config.algorithm) r.deviation_traces = self_play;
    FinishRatio(r, config.deviator);
  }
  return results;
}

RatioResult RationalityRatio(const RatioConfig& config) {
  const std::string adversary[] = {config.adversary};
  return std::move(RationalityRatios(config, adversary).front());
}

WorstCase WorstCaseRatio(std::span<const StageGame> games,
                         std::span<const std::string> adversaries,
                         const RatioConfig& base) {
  if (games.empty() || adversaries.empty()) {
    throw std::invalid_argument("worst-case ratio needs games and adversaries");
  }
  WorstCase worst;
  worst.ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < games.size(); ++g) {
    RatioConfig cfg = base;
    cfg.game = games[g];
    const std::vector<RatioResult> results =
        RationalityRatios(cfg, adversaries);
    for (std::size_t a = 0; a < results.size(); ++a) {
      if (results[a].ratio > worst.ratio) worst = {results[a].ratio, g, a};
    }
  }
  return worst;
}

}  // namespace ratlearn
