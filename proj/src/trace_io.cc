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

#include "ratlearn/trace_io.h"

#include <charconv>

#include "json.hpp"

namespace ratlearn {
namespace {

void AppendDouble(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void AppendInt(std::string& out, std::int64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string TraceToCsv(const MatchTrace& trace) {
  std::string out = kTraceCsvHeader;
  out += '\n';
  out.reserve(trace.steps.size() * 64);
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (const StepRecord& s : trace.steps) {
    sum1 += s.payoff1;
    sum2 += s.payoff2;
    const double t = static_cast<double>(s.t);
    AppendInt(out, s.t);
    out += ',';
    AppendInt(out, s.row.value());
    out += ',';
    AppendInt(out, s.col.value());
    out += ',';
    AppendDouble(out, s.payoff1);
    out += ',';
    AppendDouble(out, s.payoff2);
    out += ',';
    out += PhaseName(s.phase1);
    out += ',';
    out += PhaseName(s.phase2);
    out += ',';
    AppendDouble(out, sum1 / t);
    out += ',';
    AppendDouble(out, sum2 / t);
    out += '\n';
  }
  return out;
}

std::string EventsToCsv(const MatchTrace& trace) {
  std::string out = "t,agent,kind,value\n";
  for (const TraceEvent& e : trace.events) {
    AppendInt(out, e.event.t);
    out += ',';
    AppendInt(out, PlayerNumber(e.agent));
    out += ',';
    out += e.event.kind;
    out += ',';
    AppendDouble(out, e.event.value);
    out += '\n';
  }
  return out;
}

RunSummary SummarizeRatio(const std::string& scenario,
                          const RatioConfig& config,
                          const RatioResult& result) {
  RunSummary s;
  s.scenario = scenario;
  s.algorithm = config.algorithm;
  s.adversary = config.adversary;
  s.deviator = PlayerNumber(config.deviator);
  s.ratio = result.ratio;
  s.ratio_stderr = result.ratio_stderr;
  s.u_self = result.self_play.tail_mean;
  s.u_dev = result.deviation.tail_mean;
  s.horizon = config.horizon;
  s.seeds = config.seeds;
  return s;
}

std::string SummaryToJson(const RunSummary& summary) {
  nlohmann::ordered_json doc;
  doc["scenario"] = summary.scenario;
  doc["ratio"] = summary.ratio;
  doc["ratio_stderr"] = summary.ratio_stderr;
  doc["u_self"] = summary.u_self;
  doc["u_dev"] = summary.u_dev;
  doc["T"] = summary.horizon;
  doc["seeds"] = summary.seeds;
  doc["algorithm"] = summary.algorithm;
  doc["adversary"] = summary.adversary;
  doc["deviator"] = summary.deviator;
  return doc.dump(2) + "\n";
}

}  // namespace ratlearn
