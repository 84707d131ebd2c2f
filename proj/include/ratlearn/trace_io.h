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

// Text serializations of match traces and experiment summaries.

#ifndef RATLEARN_TRACE_IO_H_
#define RATLEARN_TRACE_IO_H_

#include <cstdint>
#include <string>

#include "ratlearn/arena.h"

namespace ratlearn {

inline constexpr char kTraceCsvHeader[] =
    "t,row,col,payoff1,payoff2,phase1,phase2,u1_avg,u2_avg";

// One line per recorded step after the header; reals use the shortest
// round-trip representation.
std::string TraceToCsv(const MatchTrace& trace);

// "t,agent,kind,value" lines for the policy events of a match.
std::string EventsToCsv(const MatchTrace& trace);

struct RunSummary {
  std::string scenario;
  std::string algorithm;
  std::string adversary;
  int deviator = 1;
  double ratio = 0.0;
  double ratio_stderr = 0.0;
  double u_self = 0.0;
  double u_dev = 0.0;
  std::int64_t horizon = 0;
  int seeds = 0;
};

RunSummary SummarizeRatio(const std::string& scenario,
                          const RatioConfig& config,
                          const RatioResult& result);

// JSON object with keys scenario, ratio, ratio_stderr, u_self, u_dev, T,
// seeds, algorithm, adversary and deviator.
std::string SummaryToJson(const RunSummary& summary);

}  // namespace ratlearn

#endif  // RATLEARN_TRACE_IO_H_
