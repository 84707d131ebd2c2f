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

#include "ratlearn/dynamics.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ratlearn {
namespace {

constexpr std::size_t kSmallActionSet = 16;

}  // namespace

History History::FromActions(const std::vector<int>& rows,
                             const std::vector<int>& cols) {
  if (rows.size() != cols.size()) {
    throw DimensionError("row and column action lists differ in length");
  }
  History history;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    history.Append({ActionIndex(rows[i]), ActionIndex(cols[i]), 0.0, 0.0});
  }
  return history;
}

HistoryWindow HistoryWindow::Sliding(int width) {
  if (width < 1) {
    throw std::invalid_argument("sliding window width must be >= 1");
  }
  return HistoryWindow(Kind::kSliding, width);
}

HistoryWindow HistoryWindow::Parse(const std::string& text) {
  if (text == "full") return Full();
  const std::string prefix = "sliding:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    int width = 0;
    try {
      width = std::stoi(text.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used > 0 && used == text.size() - prefix.size()) return Sliding(width);
  }
  throw std::invalid_argument("window must be 'full' or 'sliding:W', got '" +
                              text + "'");
}

std::string HistoryWindow::ToString() const {
  return kind_ == Kind::kFull ? "full" : "sliding:" + std::to_string(width_);
}

std::vector<double> EmpiricalFrequencies::Frequencies() const {
  std::vector<double> freq(counts.size(), 0.0);
  if (total == 0) return freq;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    freq[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return freq;
}

EmpiricalFrequencies ComputeEmpiricalFrequencies(const History& history,
                                                 const HistoryWindow& window,
                                                 Player whose,
                                                 int num_actions) {
  EmpiricalFrequencies result;
  result.counts.assign(num_actions, 0);
  std::size_t first = 0;
  if (window.kind() == HistoryWindow::Kind::kSliding &&
      history.size() > static_cast<std::size_t>(window.width())) {
    first = history.size() - window.width();
  }
  for (std::size_t i = first; i < history.size(); ++i) {
    const ActionIndex a = history[i].action(whose);
    if (a.value() < 1 || a.value() > num_actions) {
      throw DimensionError("history action outside the action set");
    }
    ++result.counts[a.offset()];
    ++result.total;
  }
  return result;
}

FrequencyTracker::FrequencyTracker(int num_actions, HistoryWindow window)
    : window_(window) {
  counts_.counts.assign(num_actions, 0);
}

void FrequencyTracker::Push(ActionIndex action) {
  if (action.value() < 1 ||
      action.value() > static_cast<int>(counts_.counts.size())) {
    throw DimensionError("tracked action outside the action set");
  }
  ++counts_.counts[action.offset()];
  ++counts_.total;
  if (window_.kind() == HistoryWindow::Kind::kSliding) {
    recent_.push_back(action);
    if (static_cast<int>(recent_.size()) > window_.width()) {
      --counts_.counts[recent_.front().offset()];
      --counts_.total;
      recent_.pop_front();
    }
  }
}

ActionIndex GfpBestResponse(const Matrix& own_matrix,
                            const EmpiricalFrequencies& opponent, Axis axis) {
  if (opponent.total == 0) return ActionIndex(1);
  const std::size_t n = opponent.counts.size();
  if (n <= kSmallActionSet) {
    std::array<double, kSmallActionSet> freq;
    for (std::size_t i = 0; i < n; ++i) {
      freq[i] = static_cast<double>(opponent.counts[i]) /
                static_cast<double>(opponent.total);
    }
    return BestResponsePure(own_matrix, std::span<const double>(freq.data(), n),
                            axis);
  }
  const std::vector<double> freq = opponent.Frequencies();
  return BestResponsePure(own_matrix, std::span<const double>(freq), axis);
}

ActionIndex GfpBestResponse(const Matrix& own_matrix, const History& history,
                            const HistoryWindow& window, Player actor) {
  const Axis axis = AxisOf(actor);
  const int opp_actions =
      axis == Axis::kRow ? own_matrix.cols() : own_matrix.rows();
  return GfpBestResponse(
      own_matrix,
      ComputeEmpiricalFrequencies(history, window, Opponent(actor),
                                  opp_actions),
      axis);
}

ActionIndex FictitiousPlayAction(const Matrix& own_matrix,
                                 const History& history,
                                 const HistoryWindow& window, Player actor) {
  return GfpBestResponse(own_matrix, history, window, actor);
}

std::vector<double> RegretState::Average() const {
  std::vector<double> avg(cumulative.size(), 0.0);
  if (steps == 0) return avg;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    avg[i] = cumulative[i] / static_cast<double>(steps);
  }
  return avg;
}

std::vector<double> InstantaneousRegret(const Matrix& own_matrix,
                                        ActionIndex own_action,
                                        ActionIndex opp_action, Axis axis) {
  const bool rows = axis == Axis::kRow;
  const int own_count = rows ? own_matrix.rows() : own_matrix.cols();
  auto payoff = [&](int own) {
    return rows ? own_matrix(own, opp_action.offset())
                : own_matrix(opp_action.offset(), own);
  };
  const double realized = payoff(own_action.offset());
  std::vector<double> regret(own_count);
  for (int a = 0; a < own_count; ++a) regret[a] = payoff(a) - realized;
  return regret;
}

void AccumulateRegret(RegretState& state,
                      const std::vector<double>& instantaneous) {
  if (instantaneous.size() != state.cumulative.size()) {
    throw DimensionError("regret vector length mismatch");
  }
  for (std::size_t i = 0; i < instantaneous.size(); ++i) {
    state.cumulative[i] += instantaneous[i];
  }
  ++state.steps;
}

RegretState RegretUpdate(RegretState state,
                         const std::vector<double>& instantaneous) {
  AccumulateRegret(state, instantaneous);
  return state;
}

MixedStrategy RegretMatchingDistribution(const RegretState& state,
                                         int num_actions) {
  if (static_cast<int>(state.cumulative.size()) != num_actions) {
    throw DimensionError("regret state does not match the action count");
  }
  const std::vector<double> avg = state.Average();
  std::vector<double> positive(num_actions);
  double total = 0.0;
  for (int a = 0; a < num_actions; ++a) {
    positive[a] = std::max(0.0, avg[a]);
    total += positive[a];
  }
  if (!(total > 0.0)) return MixedStrategy::Uniform(num_actions);
  for (double& p : positive) p /= total;
  return MixedStrategy(std::move(positive));
}

}  // namespace ratlearn
