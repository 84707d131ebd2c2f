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

// Building blocks of the baseline learning dynamics: (generalized)
// fictitious play over a history window and regret matching.
//
// Timing convention is "observe then act": the action at step t is a
// function of the history through step t-1.

#ifndef RATLEARN_DYNAMICS_H_
#define RATLEARN_DYNAMICS_H_

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "ratlearn/game.h"
#include "ratlearn/matrix.h"

namespace ratlearn {

// Time-ordered joint actions and payoffs, as seen by one agent.
class History {
 public:
  void Append(const JointOutcome& outcome) { steps_.push_back(outcome); }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const JointOutcome& operator[](std::size_t i) const { return steps_[i]; }
  const std::vector<JointOutcome>& steps() const { return steps_; }

  // Builds a history from parallel action lists (payoffs left at zero).
  static History FromActions(const std::vector<int>& rows,
                             const std::vector<int>& cols);

 private:
  std::vector<JointOutcome> steps_;
};

// Which subset of the opponent's past actions a fictitious-play agent
// responds to: all of them, or the most recent W.
class HistoryWindow {
 public:
  enum class Kind { kFull, kSliding };

  static HistoryWindow Full() { return HistoryWindow(Kind::kFull, 0); }
  // Throws std::invalid_argument if width < 1.
  static HistoryWindow Sliding(int width);
  // Accepts "full" or "sliding:W".
  static HistoryWindow Parse(const std::string& text);

  Kind kind() const { return kind_; }
  int width() const { return width_; }
  std::string ToString() const;

  bool operator==(const HistoryWindow&) const = default;

 private:
  HistoryWindow(Kind kind, int width) : kind_(kind), width_(width) {}
  Kind kind_;
  int width_;
};

struct EmpiricalFrequencies {
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;

  // counts / total; all zeros when total == 0.
  std::vector<double> Frequencies() const;
};

// Counts of `whose` actions over the window-selected suffix of `history`.
EmpiricalFrequencies ComputeEmpiricalFrequencies(const History& history,
                                                 const HistoryWindow& window,
                                                 Player whose,
                                                 int num_actions);

// Incremental equivalent of ComputeEmpiricalFrequencies for one action
// stream; produces bit-identical frequencies.
class FrequencyTracker {
 public:
  FrequencyTracker(int num_actions, HistoryWindow window);

  void Push(ActionIndex action);
  const EmpiricalFrequencies& counts() const { return counts_; }
  std::vector<double> Frequencies() const { return counts_.Frequencies(); }

 private:
  HistoryWindow window_;
  EmpiricalFrequencies counts_;
  std::deque<ActionIndex> recent_;
};

// Best response of the agent on `axis` to the opponent's frequencies,
// lowest index on ties; action 1 when the window is empty.
ActionIndex GfpBestResponse(const Matrix& own_matrix,
                            const EmpiricalFrequencies& opponent, Axis axis);

// Fictitious play: best response of `actor` to the empirical frequency of
// the opponent's actions in `history`, restricted to `window`.
ActionIndex FictitiousPlayAction(const Matrix& own_matrix,
                                 const History& history,
                                 const HistoryWindow& window, Player actor);

// Generalized fictitious play. Same computation as FictitiousPlayAction;
// with HistoryWindow::Full() the two are identical by construction.
ActionIndex GfpBestResponse(const Matrix& own_matrix, const History& history,
                            const HistoryWindow& window, Player actor);

// Cumulative regret plus step count; averages are formed on demand.
struct RegretState {
  std::vector<double> cumulative;
  std::int64_t steps = 0;

  explicit RegretState(int num_actions = 0)
      : cumulative(static_cast<std::size_t>(num_actions), 0.0) {}
  std::vector<double> Average() const;
  bool operator==(const RegretState&) const = default;
};

// delta(a) = R(a, opp) - R(own, opp) over the actor's actions.
std::vector<double> InstantaneousRegret(const Matrix& own_matrix,
                                        ActionIndex own_action,
                                        ActionIndex opp_action, Axis axis);

RegretState RegretUpdate(RegretState state,
                         const std::vector<double>& instantaneous);
// In-place form used by the policies.
void AccumulateRegret(RegretState& state,
                      const std::vector<double>& instantaneous);

// Probabilities proportional to positive average regret; uniform when no
// regret is positive (including before the first step).
MixedStrategy RegretMatchingDistribution(const RegretState& state,
                                         int num_actions);

}  // namespace ratlearn

#endif  // RATLEARN_DYNAMICS_H_
