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

#include "ratlearn/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ratlearn {

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("mixed strategy over an empty action set");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("mixed strategy has a negative entry");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kValueTolerance) {
    throw std::invalid_argument("mixed strategy sums to " +
                                std::to_string(total));
  }
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

MixedStrategy MixedStrategy::Pure(int num_actions, ActionIndex action) {
  if (action.value() < 1 || action.value() > num_actions) {
    throw DimensionError("pure strategy action out of range");
  }
  std::vector<double> probs(num_actions, 0.0);
  probs[action.offset()] = 1.0;
  return MixedStrategy(std::move(probs));
}

ActionIndex MixedStrategy::Sample(double uniform01) const {
  double cumulative = 0.0;
  int last_positive = 0;
  for (int i = 0; i < size(); ++i) {
    if (probs_[i] <= 0.0) continue;
    cumulative += probs_[i];
    last_positive = i;
    if (uniform01 < cumulative) return ActionIndex::FromOffset(i);
  }
  // Rounding left the cumulative sum a hair under one.
  return ActionIndex::FromOffset(last_positive);
}

StageGame::StageGame(Matrix payoff1, Matrix payoff2)
    : payoff1_(std::move(payoff1)), payoff2_(std::move(payoff2)) {
  if (payoff1_.empty()) {
    throw DimensionError("stage game needs at least one row and column");
  }
  if (payoff1_.rows() != payoff2_.rows() ||
      payoff1_.cols() != payoff2_.cols()) {
    throw DimensionError("payoff matrices differ in shape");
  }
  strictly_positive_ = payoff1_.MinEntry() > 0.0 && payoff2_.MinEntry() > 0.0;
}

JointOutcome Play(const StageGame& game, ActionIndex row, ActionIndex col) {
  if (row.value() < 1 || row.value() > game.rows() || col.value() < 1 ||
      col.value() > game.cols()) {
    throw DimensionError("joint action (" + std::to_string(row.value()) +
                         "," + std::to_string(col.value()) +
                         ") outside the game");
  }
  return {row, col, game.payoff(Player::kOne, row, col),
          game.payoff(Player::kTwo, row, col)};
}

PartialPayoffMatrix::PartialPayoffMatrix(int rows, int cols)
    : values_(rows, cols), known_(static_cast<std::size_t>(rows) * cols) {}

PartialPayoffMatrix::PartialPayoffMatrix(const Matrix& values)
    : values_(values),
      known_(values.values().size(), true),
      num_known_(values.values().size()) {}

PartialPayoffMatrix::PartialPayoffMatrix(Matrix values, std::vector<bool> known)
    : values_(std::move(values)), known_(std::move(known)) {
  if (known_.size() != values_.values().size()) {
    throw DimensionError("known mask and value matrix differ in shape");
  }
  num_known_ = std::count(known_.begin(), known_.end(), true);
}

std::size_t PartialPayoffMatrix::Index(ActionIndex row, ActionIndex col) const {
  if (row.value() < 1 || row.value() > rows() || col.value() < 1 ||
      col.value() > cols()) {
    throw DimensionError("entry outside the partial payoff matrix");
  }
  return static_cast<std::size_t>(row.offset()) * cols() + col.offset();
}

double PartialPayoffMatrix::value(ActionIndex row, ActionIndex col) const {
  if (!known(row, col)) throw std::logic_error("reading an unknown entry");
  return values_(row.offset(), col.offset());
}

bool PartialPayoffMatrix::Reveal(ActionIndex row, ActionIndex col,
                                 double value) {
  const std::size_t i = Index(row, col);
  if (known_[i]) {
    const double previous = values_(row.offset(), col.offset());
    if (std::abs(previous - value) > kPayoffDeterminismTolerance) {
      throw std::logic_error("entry (" + std::to_string(row.value()) + "," +
                             std::to_string(col.value()) +
                             ") re-revealed with a different payoff");
    }
    return false;
  }
  known_[i] = true;
  values_(row.offset(), col.offset()) = value;
  ++num_known_;
  return true;
}

bool PartialPayoffMatrix::RowFullyKnown(ActionIndex row) const {
  for (int c = 1; c <= cols(); ++c) {
    if (!known(row, ActionIndex(c))) return false;
  }
  return true;
}

bool PartialPayoffMatrix::ColFullyKnown(ActionIndex col) const {
  for (int r = 1; r <= rows(); ++r) {
    if (!known(ActionIndex(r), col)) return false;
  }
  return true;
}

bool PartialPayoffMatrix::AnyRowFullyKnown() const {
  for (int r = 1; r <= rows(); ++r) {
    if (RowFullyKnown(ActionIndex(r))) return true;
  }
  return false;
}

bool PartialPayoffMatrix::AnyColFullyKnown() const {
  for (int c = 1; c <= cols(); ++c) {
    if (ColFullyKnown(ActionIndex(c))) return true;
  }
  return false;
}

Matrix PartialPayoffMatrix::ZeroFill() const {
  Matrix filled(rows(), cols());
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * cols() + c;
      filled(r, c) = known_[i] ? values_(r, c) : 0.0;
    }
  }
  return filled;
}

double ExpectedPayoff(const Matrix& matrix, const MixedStrategy& row_mix,
                      const MixedStrategy& col_mix) {
  if (row_mix.size() != matrix.rows() || col_mix.size() != matrix.cols()) {
    throw DimensionError("strategy sizes do not match the payoff matrix");
  }
  double total = 0.0;
  for (int r = 0; r < matrix.rows(); ++r) {
    double row_total = 0.0;
    for (int c = 0; c < matrix.cols(); ++c) {
      row_total += matrix(r, c) * col_mix.probs()[c];
    }
    total += row_mix.probs()[r] * row_total;
  }
  return total;
}

ActionIndex BestResponsePure(const Matrix& matrix,
                             std::span<const double> opponent_weights,
                             Axis axis) {
  const bool rows = axis == Axis::kRow;
  const int own = rows ? matrix.rows() : matrix.cols();
  const int opp = rows ? matrix.cols() : matrix.rows();
  if (static_cast<int>(opponent_weights.size()) != opp) {
    throw DimensionError("opponent weights do not match the payoff matrix");
  }
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < own; ++a) {
    double value = 0.0;
    for (int b = 0; b < opp; ++b) {
      value += opponent_weights[b] * (rows ? matrix(a, b) : matrix(b, a));
    }
    if (value > best_value) {
      best_value = value;
      best = a;
    }
  }
  return ActionIndex::FromOffset(best);
}

ActionIndex BestResponsePure(const Matrix& matrix,
                             const MixedStrategy& opponent_freq, Axis axis) {
  return BestResponsePure(
      matrix, std::span<const double>(opponent_freq.probs()), axis);
}

double PureMinimaxValue(const Matrix& matrix, Player target) {
  if (matrix.empty()) throw DimensionError("empty payoff matrix");
  // Orient so rows are the deviator's actions, columns the punisher's.
  const Matrix m = target == Player::kOne ? matrix : matrix.Transposed();
  double value = std::numeric_limits<double>::infinity();
  for (int c = 0; c < m.cols(); ++c) {
    double column_max = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < m.rows(); ++r) {
      column_max = std::max(column_max, m(r, c));
    }
    value = std::min(value, column_max);
  }
  return value;
}

bool CheckPunishmentCondition(const StageGame& game, Player deviator,
                              double self_play_value) {
  if (!(self_play_value > 0.0)) {
    throw std::invalid_argument("self-play value must be positive");
  }
  return PureMinimaxValue(game.payoff(deviator), deviator) <= self_play_value;
}

std::vector<std::pair<ActionIndex, ActionIndex>> PureNashEquilibria(
    const StageGame& game) {
  const Matrix& r1 = game.payoff(Player::kOne);
  const Matrix& r2 = game.payoff(Player::kTwo);
  std::vector<std::pair<ActionIndex, ActionIndex>> equilibria;
  for (int j = 0; j < game.rows(); ++j) {
    for (int k = 0; k < game.cols(); ++k) {
      bool stable = true;
      for (int jj = 0; jj < game.rows() && stable; ++jj) {
        stable = r1(jj, k) <= r1(j, k);
      }
      for (int kk = 0; kk < game.cols() && stable; ++kk) {
        stable = r2(j, kk) <= r2(j, k);
      }
      if (stable) {
        equilibria.emplace_back(ActionIndex::FromOffset(j),
                                ActionIndex::FromOffset(k));
      }
    }
  }
  return equilibria;
}

}  // namespace ratlearn
