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


#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "ratlearn/catalog.h"
#include "ratlearn/game_io.h"
#include "ratlearn/trace_io.h"

namespace ratlearn {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("ratlearn_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(GameJsonTest, ParseRowMajor) {
  const StageGame g = ParseGameJson(
      R"({"rows": 2, "cols": 3, "payoff1": [1,2,3,4,5,6],
          "payoff2": [6,5,4,3,2,1]})");
  EXPECT_EQ(g.payoff(Player::kOne), (Matrix{{1, 2, 3}, {4, 5, 6}}));
  EXPECT_EQ(g.payoff(Player::kTwo), (Matrix{{6, 5, 4}, {3, 2, 1}}));
}

TEST(GameJsonTest, RoundTrip) {
  const StageGame g = RandomGame(3, 2, 7.0, 5);
  const StageGame back = ParseGameJson(GameToJson(g));
  EXPECT_EQ(back.payoff(Player::kOne), g.payoff(Player::kOne));
  EXPECT_EQ(back.payoff(Player::kTwo), g.payoff(Player::kTwo));
}

TEST(GameJsonTest, Errors) {
  EXPECT_THROW(ParseGameJson("{"), GameFormatError);
  EXPECT_THROW(ParseGameJson(R"({"rows": 1})"), GameFormatError);
  EXPECT_THROW(ParseGameJson(R"({"rows": 1, "cols": 2, "payoff1": [1],
                                 "payoff2": [1, 2]})"),
               DimensionError);
  EXPECT_THROW(ParseGameJson(R"({"rows": 1, "cols": 1, "payoff1": ["a"],
                                 "payoff2": [1]})"),
               GameFormatError);
}

TEST(GameFileTest, SaveLoadAndMissingFile) {
  const fs::path dir = TempDir("game");
  const StageGame g = MakeExploitableFpGame(2);
  SaveGame(g, (dir / "g.json").string());
  EXPECT_EQ(LoadGame((dir / "g.json").string()).payoff(Player::kTwo),
            g.payoff(Player::kTwo));
  EXPECT_THROW(LoadGame((dir / "missing.json").string()),
               std::ios_base::failure);
  // No temporary file is left behind.
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    files += e.is_regular_file();
  }
  EXPECT_EQ(files, 1);
}

TEST(TraceCsvTest, HeaderAndRows) {
  MatchConfig cfg(MakeExploitableFpGame(4));
  cfg.horizon = 8;
  const MatchTrace trace = RunMatch(cfg);
  const auto lines = Lines(TraceToCsv(trace));
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], kTraceCsvHeader);
  EXPECT_EQ(lines[1], "1,1,1,10,10,explore,explore,10,10");
  // Step 2 is cell (1,2) worth 4 to both; running average 7.
  EXPECT_EQ(lines[2], "2,1,2,4,4,explore,explore,7,7");
  EXPECT_EQ(lines[7].substr(0, 2), "7,");
  EXPECT_NE(lines[7].find("exploit"), std::string::npos);
}

TEST(TraceCsvTest, RealsRoundTrip) {
  const StageGame g(Matrix{{0.1}}, Matrix{{1.0 / 3}});
  MatchConfig cfg(g);
  cfg.horizon = 3;
  const auto lines = Lines(TraceToCsv(RunMatch(cfg)));
  std::istringstream row(lines[1]);
  std::vector<std::string> fields;
  for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
  ASSERT_EQ(fields.size(), 9u);
  EXPECT_EQ(std::stod(fields[3]), 0.1);
  EXPECT_EQ(std::stod(fields[4]), 1.0 / 3);
}

TEST(EventsCsvTest, PunishEventListed) {
  MatchConfig cfg(MakeExploitableFpGame(4));
  cfg.policy2 = "exploit:const:3";
  cfg.horizon = 20;
  const auto lines = Lines(EventsToCsv(RunMatch(cfg)));
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[0], "t,agent,kind,value");
  EXPECT_EQ(lines[1], "7,1,punish,0");
}

TEST(SummaryJsonTest, KeysInOrder) {
  RunSummary s;
  s.scenario = "demo";
  s.algorithm = "rgfp";
  s.adversary = "br";
  s.deviator = 2;
  s.ratio = 0.5;
  s.horizon = 100;
  s.seeds = 3;
  const auto doc = nlohmann::ordered_json::parse(SummaryToJson(s));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "scenario", "ratio", "ratio_stderr", "u_self", "u_dev",
                      "T", "seeds", "algorithm", "adversary", "deviator"}));
  EXPECT_EQ(doc["ratio"], 0.5);
  EXPECT_EQ(doc["deviator"], 2);
}

}  // namespace
}  // namespace ratlearn
