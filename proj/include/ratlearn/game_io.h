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

// Game files are JSON objects:
//   {"rows": 2, "cols": 3,
//    "payoff1": [r11, r12, r13, r21, r22, r23],
//    "payoff2": [...]}
// with both matrices in row-major order.

#ifndef RATLEARN_GAME_IO_H_
#define RATLEARN_GAME_IO_H_

#include <stdexcept>
#include <string>

#include "ratlearn/game.h"

namespace ratlearn {

class GameFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws GameFormatError on malformed text and DimensionError when the
// payoff arrays do not hold rows*cols entries.
StageGame ParseGameJson(const std::string& text);
std::string GameToJson(const StageGame& game);

// Throws std::ios_base::failure naming the path when it cannot be read.
StageGame LoadGame(const std::string& path);
void SaveGame(const StageGame& game, const std::string& path);

// Writes `contents` to a temporary sibling and renames it over `path`.
void WriteFileAtomically(const std::string& path, const std::string& contents);

}  // namespace ratlearn

#endif  // RATLEARN_GAME_IO_H_
