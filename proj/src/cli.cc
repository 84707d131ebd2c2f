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

#include "ratlearn/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratlearn/arena.h"
#include "ratlearn/catalog.h"
#include "ratlearn/game_io.h"
#include "ratlearn/trace_io.h"

namespace ratlearn {
namespace {

namespace fs = std::filesystem;

struct FlagInfo {
  const char* name;
  const char* help;
};

constexpr FlagInfo kFlags[] = {
    {"horizon", "Steps per match (T)"},
    {"seeds", "Number of seeds averaged per estimate"},
    {"seed", "Base seed; run i uses seed + i"},
    {"window", "History window for GFP-based play: full or sliding:W"},
    {"mu", "Exploration entry mu of the rational algorithms"},
    {"nu", "Row-boundary exploration entry nu of R-RM"},
    {"c1", "R-RM epoch length constant c1"},
    {"c2", "R-RM epoch length constant c2"},
    {"delta", "R-RM confidence parameter delta in (0,1)"},
    {"monitoring", "perfect or imperfect"},
    {"out", "Output directory for CSV and JSON files"},
    {"jobs", "Worker threads for independent matches"},
    {"c", "Construction parameter c >= 1 of the scenario games"},
    {"deviator", "Deviating agent, 1 or 2"},
};

struct Settings {
  std::int64_t horizon = 100000;
  int seeds = 50;
  std::uint64_t seed = 0;
  HistoryWindow window = HistoryWindow::Full();
  double mu = 1.0;
  RRmConfig rrm;
  Monitoring monitoring = Monitoring::kPerfect;
  std::string out;
  int jobs = 1;
  double c = 4.0;
  Player deviator = Player::kOne;
};

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double ParseReal(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("'" + key + "' expects a number, got '" + value + "'");
}

std::int64_t ParseInteger(const std::string& key, const std::string& value,
                          std::int64_t min_value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used == value.size() && v >= min_value) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("'" + key + "' expects an integer >= " +
                    std::to_string(min_value) + ", got '" + value + "'");
}

void ApplySetting(Settings& s, const std::string& key,
                  const std::string& value) {
  try {
    if (key == "horizon") {
      s.horizon = ParseInteger(key, value, 1);
    } else if (key == "seeds") {
      s.seeds = static_cast<int>(ParseInteger(key, value, 1));
    } else if (key == "seed") {
      s.seed = static_cast<std::uint64_t>(ParseInteger(key, value, 0));
    } else if (key == "window") {
      s.window = HistoryWindow::Parse(value);
    } else if (key == "mu") {
      s.mu = ParseReal(key, value);
    } else if (key == "nu") {
      s.rrm.nu = ParseReal(key, value);
    } else if (key == "c1") {
      s.rrm.c1 = ParseReal(key, value);
    } else if (key == "c2") {
      s.rrm.c2 = ParseReal(key, value);
    } else if (key == "delta") {
      s.rrm.delta = ParseReal(key, value);
    } else if (key == "monitoring") {
      s.monitoring = ParseMonitoring(value);
    } else if (key == "out") {
      s.out = value;
    } else if (key == "jobs") {
      s.jobs = static_cast<int>(ParseInteger(key, value, 1));
    } else if (key == "c") {
      s.c = ParseReal(key, value);
      if (!(s.c >= 1.0)) throw ConfigError("'c' must be >= 1");
    } else if (key == "deviator") {
      const std::int64_t d = ParseInteger(key, value, 1);
      if (d > 2) throw ConfigError("'deviator' must be 1 or 2");
      s.deviator = d == 1 ? Player::kOne : Player::kTwo;
    } else {
      throw ConfigError("unknown setting '" + key + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void FinishSettings(Settings& s) {
  RRmConfig check = s.rrm;
  check.mu = s.mu;
  try {
    check.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(s.mu > 0.0)) throw ConfigError("'mu' must be positive");
}

bool UsesRrm(const std::string& spec) {
  return spec.find("rrm") != std::string::npos;
}

void WarnProofConstraint(const Settings& s, std::ostream& err) {
  if (!s.rrm.ProofConstraintHolds(1)) {
    err << "warning: c2 * t^(2 c1 - 1) exceeds 2 for c1=" << s.rrm.c1
        << ", c2=" << s.rrm.c2
        << "; the 1 - delta guarantee is not covered by these constants\n";
  }
}

RatioConfig MakeRatioConfig(const StageGame& game, const Settings& s,
                            const std::string& algorithm,
                            const std::string& adversary, Player deviator) {
  RatioConfig cfg(game);
  cfg.algorithm = algorithm;
  cfg.adversary = adversary;
  cfg.deviator = deviator;
  cfg.monitoring = s.monitoring;
  cfg.horizon = s.horizon;
  cfg.seeds = s.seeds;
  cfg.base_seed = s.seed;
  cfg.window = s.window;
  cfg.mu = s.mu;
  cfg.rrm = s.rrm;
  cfg.jobs = s.jobs;
  return cfg;
}

MatchConfig MakeMatchConfig(const StageGame& game, const Settings& s,
                            const std::string& algorithm,
                            const std::string& policy1,
                            const std::string& policy2, std::uint64_t seed,
                            bool record) {
  MatchConfig m(game);
  m.algorithm = algorithm;
  m.policy1 = policy1;
  m.policy2 = policy2;
  m.monitoring = s.monitoring;
  m.horizon = s.horizon;
  m.seed = seed;
  m.window = s.window;
  m.mu = s.mu;
  m.rrm = s.rrm;
  m.record_steps = record;
  return m;
}

std::string FormatValue(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

void PrintRatio(std::ostream& out, const std::string& label,
                const RatioResult& r) {
  out << label << ": ratio " << FormatValue(r.ratio) << " +/- "
      << FormatValue(r.ratio_stderr) << " (u_dev "
      << FormatValue(r.deviation.tail_mean) << ", u_self "
      << FormatValue(r.self_play.tail_mean) << ")\n";
}

void EnsureOutDir(const Settings& s) {
  if (!s.out.empty()) fs::create_directories(s.out);
}

std::string OutPath(const Settings& s, const std::string& file) {
  return (fs::path(s.out) / file).string();
}

// One ratio estimate per adversary, printed and collected into a summary
// whose headline ratio is the worst case.
struct Suite {
  std::string scenario;
  StageGame game;
  std::string algorithm;
  Player deviator;
  std::vector<std::string> adversaries;
};

int RunSuite(const Suite& suite, const Settings& s, std::ostream& out) {
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  std::optional<RunSummary> worst;
  RatioConfig cfg = MakeRatioConfig(suite.game, s, suite.algorithm,
                                    suite.algorithm, suite.deviator);
  const std::vector<RatioResult> results =
      RationalityRatios(cfg, suite.adversaries);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::string& adversary = suite.adversaries[i];
    const RatioResult& r = results[i];
    cfg.adversary = adversary;
    PrintRatio(out, suite.scenario + " [" + adversary + "]", r);
    RunSummary row = SummarizeRatio(suite.scenario, cfg, r);
    details.push_back({{"adversary", adversary},
                       {"ratio", row.ratio},
                       {"ratio_stderr", row.ratio_stderr},
                       {"u_self", row.u_self},
                       {"u_dev", row.u_dev}});
    if (!worst || row.ratio > worst->ratio) worst = row;
  }
  out << suite.scenario << ": worst ratio " << FormatValue(worst->ratio)
      << " [" << worst->adversary << "]\n";
  if (!s.out.empty()) {
    EnsureOutDir(s);
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(
        SummaryToJson(*worst));
    doc["adversaries"] = details;
    WriteFileAtomically(OutPath(s, "summary.json"), doc.dump(2) + "\n");
  }
  return kExitOk;
}

// The four value-versus-time conditions: compliant self-play, the
// deviator against the baseline dynamic, and the deviator entering after
// or during the sweep against the rational algorithm.
struct Curves {
  StageGame game;
  std::string algorithm;
  std::string baseline;
  std::string deviant;
  Player deviator;
};

void RunCurves(const std::string& scenario, const Curves& curves,
               const Settings& s, std::ostream& out) {
  struct Condition {
    const char* label;
    std::string algorithm;
    std::string spec;
  };
  const std::vector<Condition> conditions = {
      {"self-play", curves.algorithm, curves.algorithm},
      {"dev-vs-baseline", curves.baseline, curves.deviant},
      {"dev-exploit", curves.algorithm, "exploit:" + curves.deviant},
      {"dev-explore", curves.algorithm, "explore:" + curves.deviant},
  };
  EnsureOutDir(s);
  for (const Condition& cond : conditions) {
    const bool dev_one = curves.deviator == Player::kOne;
    const std::string p1 = dev_one ? cond.spec : cond.algorithm;
    const std::string p2 = dev_one ? cond.algorithm : cond.spec;
    std::vector<MatchTrace> traces(s.seeds);
    ParallelFor(s.seeds, s.jobs, [&](int i) {
      traces[i] = RunMatch(MakeMatchConfig(curves.game, s, cond.algorithm, p1,
                                           p2, s.seed + i, false));
    });
    const ValueEstimate v = EstimateValue(traces, curves.deviator);
    out << scenario << " [" << cond.label << "]: deviator value "
        << FormatValue(v.tail_mean) << " +/- " << FormatValue(v.std_err)
        << "\n";
    if (!s.out.empty()) {
      const MatchTrace trace = RunMatch(MakeMatchConfig(
          curves.game, s, cond.algorithm, p1, p2, s.seed, true));
      WriteFileAtomically(OutPath(s, std::string(cond.label) + ".csv"),
                          TraceToCsv(trace));
    }
  }
}

Suite RGfpSuite(const Settings& s) {
  return {"rgfp-rational", MakeExploitableFpGame(s.c), "rgfp", Player::kTwo,
          {"const:1", "const:2", "const:3", "br", "mixed:0.2,0.3,0.5",
           "mixed:0.1,0.1,0.8", "explore:br", "exploit:br"}};
}

Suite RRmSuite(const Settings& s) {
  return {"rrm-rational", MakeExploitableRmGame(s.c), "rrm", Player::kOne,
          {"const:1", "const:2", "br", "mixed:0.5,0.5", "mixed:0.8,0.2",
           "explore:br", "exploit:br"}};
}

int RunScenario(const std::string& name, const Settings& s, std::ostream& out,
                std::ostream& err) {
  if (name == "thm1-fp-exploit" || name == "thm2-rm-exploit") {
    const bool fp = name == "thm1-fp-exploit";
    const RatioConfig cfg =
        fp ? MakeRatioConfig(MakeExploitableFpGame(s.c), s, "fp", "const:3",
                             Player::kTwo)
           : MakeRatioConfig(MakeExploitableRmGame(s.c), s, "rm", "const:1",
                             Player::kOne);
    const RatioResult r = RationalityRatio(cfg);
    PrintRatio(out, name, r);
    if (!s.out.empty()) {
      EnsureOutDir(s);
      WriteFileAtomically(OutPath(s, "summary.json"),
                          SummaryToJson(SummarizeRatio(name, cfg, r)));
    }
    return kExitOk;
  }
  if (name == "rgfp-rational") {
    const Suite suite = RGfpSuite(s);
    const int code = RunSuite(suite, s, out);
    if (!s.out.empty()) {
      RunCurves(name, {suite.game, "rgfp", "fp", "br", suite.deviator}, s,
                out);
    }
    return code;
  }
  if (name == "rrm-rational") {
    WarnProofConstraint(s, err);
    const Suite suite = RRmSuite(s);
    const int code = RunSuite(suite, s, out);
    if (!s.out.empty()) {
      RunCurves(name, {suite.game, "rrm", "rm", "br", suite.deviator}, s, out);
    }
    return code;
  }
  if (name == "imperfect-negative") {
    const StageGame game = MakeMonitoringPair(s.c).second;
    nlohmann::ordered_json doc;
    doc["scenario"] = name;
    for (Monitoring m : {Monitoring::kImperfect, Monitoring::kPerfect}) {
      Settings local = s;
      local.monitoring = m;
      const RatioConfig cfg =
          MakeRatioConfig(game, local, "rgfp", "exploit:const:2", Player::kTwo);
      const RatioResult r = RationalityRatio(cfg);
      PrintRatio(out, name + " [" + MonitoringName(m) + "]", r);
      doc[MonitoringName(m)] = nlohmann::ordered_json::parse(
          SummaryToJson(SummarizeRatio(name, cfg, r)));
    }
    if (!s.out.empty()) {
      EnsureOutDir(s);
      WriteFileAtomically(OutPath(s, "summary.json"), doc.dump(2) + "\n");
    }
    return kExitOk;
  }
  if (name == "fig5-structure") {
    RunCurves(name, {MakeExploitableFpGame(s.c), "rgfp", "fp", "br",
                     Player::kTwo},
              s, out);
    return kExitOk;
  }
  if (name == "fig7-structure") {
    WarnProofConstraint(s, err);
    RunCurves(name, {MakeExploitableRmGame(s.c), "rrm", "rm", "br",
                     Player::kOne},
              s, out);
    return kExitOk;
  }
  std::string valid;
  for (const std::string& n : ScenarioNames()) valid += " " + n;
  throw ConfigError("unknown scenario '" + name + "'; valid names:" + valid);
}

std::string ReadFile(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ConfigError(std::string("cannot read ") + what + " '" + path +
                             "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StageGame LoadGameChecked(const std::string& path) {
  if (!fs::is_regular_file(path)) {
    throw ConfigError("game file '" + path + "' does not exist");
  }
  return LoadGame(path);
}

int RunConfig(const std::string& config_path,
              const std::map<std::string, std::string>& flags,
              std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> kv =
      ParseKeyValueConfig(ReadFile(config_path, "config file"));
  for (const auto& [k, v] : flags) kv[k] = v;

  auto take = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  const std::string game_entry = take("game", "");
  if (game_entry.empty()) throw ConfigError("config needs a 'game' entry");
  fs::path game_path(game_entry);
  if (game_path.is_relative()) {
    game_path = fs::path(config_path).parent_path() / game_path;
  }
  const std::string algorithm = take("algorithm", "rgfp");
  const std::string policy1 = take("policy1", algorithm);
  const std::string policy2 = take("policy2", algorithm);
  const std::string adversary = take("adversary", "");
  const std::string scenario =
      take("scenario", fs::path(config_path).stem().string());

  Settings s;
  for (const auto& [k, v] : kv) ApplySetting(s, k, v);
  FinishSettings(s);
  for (const std::string& spec : {algorithm, policy1, policy2}) {
    if (!IsValidPolicySpec(spec)) {
      throw ConfigError("invalid policy spec '" + spec + "'");
    }
  }
  if (!adversary.empty() && !IsValidPolicySpec(adversary)) {
    throw ConfigError("invalid adversary spec '" + adversary + "'");
  }
  const StageGame game = LoadGameChecked(game_path.string());
  if (UsesRrm(algorithm) || UsesRrm(policy1) || UsesRrm(policy2) ||
      UsesRrm(adversary)) {
    WarnProofConstraint(s, err);
  }
  EnsureOutDir(s);

  if (!adversary.empty()) {
    const RatioConfig cfg =
        MakeRatioConfig(game, s, algorithm, adversary, s.deviator);
    const RatioResult r = RationalityRatio(cfg);
    PrintRatio(out, scenario, r);
    const bool dev_one = s.deviator == Player::kOne;
    const MatchTrace trace = RunMatch(
        MakeMatchConfig(game, s, algorithm, dev_one ? adversary : algorithm,
                        dev_one ? algorithm : adversary, s.seed, true));
    WriteFileAtomically(OutPath(s, "trace.csv"), TraceToCsv(trace));
    WriteFileAtomically(OutPath(s, "events.csv"), EventsToCsv(trace));
    WriteFileAtomically(OutPath(s, "summary.json"),
                        SummaryToJson(SummarizeRatio(scenario, cfg, r)));
    return kExitOk;
  }

  const MatchTrace trace = RunMatch(
      MakeMatchConfig(game, s, algorithm, policy1, policy2, s.seed, true));
  WriteFileAtomically(OutPath(s, "trace.csv"), TraceToCsv(trace));
  WriteFileAtomically(OutPath(s, "events.csv"), EventsToCsv(trace));
  nlohmann::ordered_json doc;
  doc["scenario"] = scenario;
  doc["policy1"] = policy1;
  doc["policy2"] = policy2;
  doc["T"] = s.horizon;
  doc["seed"] = s.seed;
  doc["u1_avg"] = trace.Mean(Player::kOne);
  doc["u2_avg"] = trace.Mean(Player::kTwo);
  doc["u1_tail"] = trace.TailMean(Player::kOne);
  doc["u2_tail"] = trace.TailMean(Player::kTwo);
  WriteFileAtomically(OutPath(s, "summary.json"), doc.dump(2) + "\n");
  out << scenario << ": u1 " << FormatValue(trace.Mean(Player::kOne))
      << ", u2 " << FormatValue(trace.Mean(Player::kTwo)) << " over T="
      << s.horizon << "\n";
  return kExitOk;
}

int RunRatio(const std::string& game_path, const std::string& algorithm,
             const std::string& adversary, const Settings& s,
             std::ostream& out, std::ostream& err) {
  if (!IsValidPolicySpec(algorithm)) {
    throw ConfigError("invalid algorithm '" + algorithm + "'");
  }
  if (!IsValidPolicySpec(adversary)) {
    throw ConfigError("invalid adversary '" + adversary + "'");
  }
  const StageGame game = LoadGameChecked(game_path);
  if (UsesRrm(algorithm) || UsesRrm(adversary)) WarnProofConstraint(s, err);
  const RatioConfig cfg =
      MakeRatioConfig(game, s, algorithm, adversary, s.deviator);
  const RatioResult r = RationalityRatio(cfg);
  PrintRatio(out, "ratio", r);
  if (!s.out.empty()) {
    EnsureOutDir(s);
    WriteFileAtomically(OutPath(s, "summary.json"),
                        SummaryToJson(SummarizeRatio("ratio", cfg, r)));
  }
  return kExitOk;
}

using FlagValues = std::map<std::string, std::string>;

void AddFlags(CLI::App* cmd, FlagValues& storage,
              std::vector<std::pair<std::string, CLI::Option*>>& opts) {
  for (const FlagInfo& f : kFlags) {
    CLI::Option* opt =
        cmd->add_option(std::string("--") + f.name, storage[f.name], f.help);
    opts.emplace_back(f.name, opt);
  }
}

FlagValues GivenFlags(
    const FlagValues& storage,
    const std::vector<std::pair<std::string, CLI::Option*>>& opts) {
  FlagValues given;
  for (const auto& [name, opt] : opts) {
    if (opt->count() > 0) given[name] = storage.at(name);
  }
  return given;
}

}  // namespace

std::map<std::string, std::string> ParseKeyValueConfig(
    const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is not 'key = value'");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        " has an empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("config key '" + key + "' appears twice");
    }
  }
  return kv;
}

const std::vector<std::string>& ScenarioNames() {
  static const std::vector<std::string> names = {
      "thm1-fp-exploit", "thm2-rm-exploit",    "rgfp-rational",
      "rrm-rational",    "imperfect-negative", "fig5-structure",
      "fig7-structure"};
  return names;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Simulate learning dynamics in repeated two-player games and "
               "measure rationality ratios.",
               "ratlearn"};
  app.require_subcommand(1);

  using OptionList = std::vector<std::pair<std::string, CLI::Option*>>;
  FlagValues run_flags, scenario_flags, ratio_flags;
  OptionList run_opts, scenario_opts, ratio_opts;

  std::string config_path;
  CLI::App* run = app.add_subcommand(
      "run", "Run the match or ratio experiment described by a config file");
  run->add_option("config", config_path, "key = value config file")
      ->required();
  AddFlags(run, run_flags, run_opts);

  std::string scenario_name;
  CLI::App* scenario =
      app.add_subcommand("scenario", "Run a named pre-built experiment");
  std::string names_help = "One of:";
  for (const std::string& n : ScenarioNames()) names_help += " " + n;
  scenario->add_option("name", scenario_name, names_help)->required();
  AddFlags(scenario, scenario_flags, scenario_opts);

  std::string game_path, algorithm, adversary;
  CLI::App* ratio = app.add_subcommand(
      "ratio", "Estimate the rationality ratio of an adversary");
  ratio->add_option("game", game_path, "Game JSON file")->required();
  ratio->add_option("algorithm", algorithm, "fp, gfp, rm, rgfp or rrm")
      ->required();
  ratio->add_option("adversary", adversary,
                    "Policy spec of the deviating agent, e.g. const:3, br, "
                    "mixed:0.5,0.5, exploit:br")
      ->required();
  AddFlags(ratio, ratio_flags, ratio_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    if (run->parsed()) {
      return RunConfig(config_path, GivenFlags(run_flags, run_opts), out, err);
    }
    Settings s;
    const bool is_scenario = scenario->parsed();
    const FlagValues given = is_scenario
                                 ? GivenFlags(scenario_flags, scenario_opts)
                                 : GivenFlags(ratio_flags, ratio_opts);
    for (const auto& [k, v] : given) ApplySetting(s, k, v);
    FinishSettings(s);
    if (is_scenario) return RunScenario(scenario_name, s, out, err);
    return RunRatio(game_path, algorithm, adversary, s, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const GameFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DimensionError& e) {
    err << "error: dimension mismatch: " << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace ratlearn
