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

// Parametric stage games used by the scenarios, and a seeded random game
// generator.

#ifndef RATLEARN_CATALOG_H_
#define RATLEARN_CATALOG_H_

#include <cstdint>
#include <utility>

#include "ratlearn/game.h"

namespace ratlearn {

// 2x3 game where fictitious play settles on the strict equilibrium (1,1)
// worth 10 to agent two, while agent two holding column 3 steers agent one
// to row 2 and collects 10(c+1).
//   R1 = [[10, 4, 3], [2, 1, 6]]
//   R2 = [[10, 4, 3], [1, 10(c+1)+10, 10(c+1)]]
// Throws std::invalid_argument if c < 1.
StageGame MakeExploitableFpGame(double c);

// 2x2 game where regret matching settles on the strict equilibrium (2,2)
// worth 5 to agent one, while agent one holding row 1 drives agent two to
// column 1 and collects 5(c+1).
//   R1 = [[5(c+1), 1], [5(c+1)+5, 5]]
//   R2 = [[3, 2], [2, 5]]
StageGame MakeExploitableRmGame(double c);

// Two 2x2 games sharing agent one's payoffs [[5,1],[2,4]]. In the first,
// column 2 dominates for agent two, making (2,2) the only equilibrium. In
// the second, column 1 dominates, making (1,1) the only equilibrium and
// worth 10 to agent two, while (2,2) pays it 10(c+1).
//   G1: R2 = [[1, 6], [2, 7]]
//   G2: R2 = [[10, 1], [10(c+1)+10, 10(c+1)]]
std::pair<StageGame, StageGame> MakeMonitoringPair(double c);

// Entries drawn i.i.d. uniform on (0, max_payoff]. Deterministic per seed.
StageGame RandomGame(int rows, int cols, double max_payoff,
                     std::uint64_t seed);

}  // namespace ratlearn

#endif  // RATLEARN_CATALOG_H_
