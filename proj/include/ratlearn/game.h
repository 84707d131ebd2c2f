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

// Two-player stage games in bimatrix form. Agent one picks rows, agent two
// picks columns. Actions are one-based at API boundaries (ActionIndex) and
// zero-based inside Matrix.

#ifndef RATLEARN_GAME_H_
#define RATLEARN_GAME_H_

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratlearn/matrix.h"

namespace ratlearn {

inline constexpr double kValueTolerance = 1e-9;
inline constexpr double kPayoffDeterminismTolerance = 1e-12;

enum class Player { kOne = 0, kTwo = 1 };

constexpr Player Opponent(Player p) {
  return p == Player::kOne ? Player::kTwo : Player::kOne;
}
constexpr int PlayerNumber(Player p) { return p == Player::kOne ? 1 : 2; }

// Which side of a matrix an agent chooses from: rows for agent one,
// columns for agent two.
enum class Axis { kRow, kCol };

constexpr Axis AxisOf(Player p) {
  return p == Player::kOne ? Axis::kRow : Axis::kCol;
}

class ActionIndex {
 public:
  constexpr ActionIndex() = default;
  constexpr explicit ActionIndex(int one_based) : value_(one_based) {}
  static constexpr ActionIndex FromOffset(int zero_based) {
    return ActionIndex(zero_based + 1);
  }

  constexpr int value() const { return value_; }
  constexpr int offset() const { return value_ - 1; }

  constexpr auto operator<=>(const ActionIndex&) const = default;

 private:
  int value_ = 1;
};

// A probability vector over one agent's actions.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws std::invalid_argument unless entries are >= 0 and sum to one
  // within kValueTolerance.
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy Uniform(int num_actions);
  static MixedStrategy Pure(int num_actions, ActionIndex action);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](ActionIndex a) const { return probs_[a.offset()]; }
  const std::vector<double>& probs() const { return probs_; }

  // Inverse-CDF sample from a uniform draw in [0, 1).
  ActionIndex Sample(double uniform01) const;

  bool operator==(const MixedStrategy&) const = default;

 private:
  std::vector<double> probs_;
};

class StageGame {
 public:
  StageGame(Matrix payoff1, Matrix payoff2);

  int rows() const { return payoff1_.rows(); }
  int cols() const { return payoff1_.cols(); }
  int num_actions(Player p) const {
    return p == Player::kOne ? rows() : cols();
  }
  const Matrix& payoff(Player p) const {
    return p == Player::kOne ? payoff1_ : payoff2_;
  }
  double payoff(Player p, ActionIndex row, ActionIndex col) const {
    return payoff(p)(row.offset(), col.offset());
  }

  // True iff every entry of both matrices is > 0. Rationality ratios are
  // only defined for such games.
  bool strictly_positive() const { return strictly_positive_; }

  bool operator==(const StageGame&) const = default;

 private:
  Matrix payoff1_;
  Matrix payoff2_;
  bool strictly_positive_ = false;
};

struct JointOutcome {
  ActionIndex row;
  ActionIndex col;
  double payoff1 = 0.0;
  double payoff2 = 0.0;

  ActionIndex action(Player p) const { return p == Player::kOne ? row : col; }
};

JointOutcome Play(const StageGame& game, ActionIndex row, ActionIndex col);

// A payoff matrix some of whose entries have not been observed yet.
class PartialPayoffMatrix {
 public:
  PartialPayoffMatrix() = default;
  PartialPayoffMatrix(int rows, int cols);
  // Fully known matrix.
  explicit PartialPayoffMatrix(const Matrix& values);
  PartialPayoffMatrix(Matrix values, std::vector<bool> known);

  int rows() const { return values_.rows(); }
  int cols() const { return values_.cols(); }

  bool known(ActionIndex row, ActionIndex col) const {
    return known_[Index(row, col)];
  }
  // Reading an unknown entry throws std::logic_error.
  double value(ActionIndex row, ActionIndex col) const;

  // Marks an entry known. Returns true if it was previously unknown.
  // Re-revealing a different value (beyond kPayoffDeterminismTolerance)
  // throws std::logic_error: payoffs are deterministic.
  bool Reveal(ActionIndex row, ActionIndex col, double value);

  bool RowFullyKnown(ActionIndex row) const;
  bool ColFullyKnown(ActionIndex col) const;
  bool AnyRowFullyKnown() const;
  bool AnyColFullyKnown() const;
  bool FullyKnown() const { return num_known_ == known_.size(); }
  int num_known() const { return static_cast<int>(num_known_); }

  // Known entries verbatim, unknown entries exactly 0.
  Matrix ZeroFill() const;

 private:
  std::size_t Index(ActionIndex row, ActionIndex col) const;

  Matrix values_;
  std::vector<bool> known_;
  std::size_t num_known_ = 0;
};

// Sum_{j,k} row_mix[j] * matrix[j,k] * col_mix[k].
double ExpectedPayoff(const Matrix& matrix, const MixedStrategy& row_mix,
                      const MixedStrategy& col_mix);

// Argmax over `axis` actions of expected payoff against the opponent
// weights; lowest index wins ties. `opponent_weights` indexes the opposing
// axis and need not be normalized.
ActionIndex BestResponsePure(const Matrix& matrix,
                             std::span<const double> opponent_weights,
                             Axis axis);
ActionIndex BestResponsePure(const Matrix& matrix,
                             const MixedStrategy& opponent_freq, Axis axis);

// min over punisher pure actions of max over deviator pure actions of the
// deviator's payoff. `matrix` is the deviator's own payoff matrix.
double PureMinimaxValue(const Matrix& matrix, Player target);

// True when the pure minimax value of the deviator's matrix does not exceed
// its self-play value, so that punishment leaves a deviator no better off.
bool CheckPunishmentCondition(const StageGame& game, Player deviator,
                              double self_play_value);

// Exhaustive pure Nash equilibria (weak inequalities).
std::vector<std::pair<ActionIndex, ActionIndex>> PureNashEquilibria(
    const StageGame& game);

}  // namespace ratlearn

#endif  // RATLEARN_GAME_H_
