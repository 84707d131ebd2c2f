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

#include "ratlearn/game_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ratlearn {
namespace {

using nlohmann::json;

Matrix ReadMatrix(const json& doc, const char* key, int rows, int cols) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw GameFormatError(std::string("game needs an array '") + key + "'");
  }
  const json& arr = doc[key];
  if (arr.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionError(std::string("'") + key + "' holds " +
                         std::to_string(arr.size()) + " entries, expected " +
                         std::to_string(rows * cols));
  }
  std::vector<double> values;
  values.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) {
      throw GameFormatError(std::string("non-numeric entry in '") + key + "'");
    }
    values.push_back(v.get<double>());
  }
  return Matrix::FromRowMajor(rows, cols, std::move(values));
}

int ReadDimension(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() ||
      doc[key].get<int>() < 1) {
    throw GameFormatError(std::string("game needs a positive integer '") +
                          key + "'");
  }
  return doc[key].get<int>();
}

}  // namespace

StageGame ParseGameJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameFormatError(std::string("game file is not valid JSON: ") +
                          e.what());
  }
  if (!doc.is_object()) throw GameFormatError("game file must be an object");
  const int rows = ReadDimension(doc, "rows");
  const int cols = ReadDimension(doc, "cols");
  return StageGame(ReadMatrix(doc, "payoff1", rows, cols),
                   ReadMatrix(doc, "payoff2", rows, cols));
}

std::string GameToJson(const StageGame& game) {
  json doc;
  doc["rows"] = game.rows();
  doc["cols"] = game.cols();
  doc["payoff1"] = game.payoff(Player::kOne).values();
  doc["payoff2"] = game.payoff(Player::kTwo).values();
  return doc.dump(2) + "\n";
}

StageGame LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read game file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGameJson(buf.str());
}

void SaveGame(const StageGame& game, const std::string& path) {
  WriteFileAtomically(path, GameToJson(game));
}

void WriteFileAtomically(const std::string& path,
                         const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot write '" + tmp + "'");
    out << contents;
    out.flush();
    if (!out) throw std::ios_base::failure("short write to '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ratlearn
