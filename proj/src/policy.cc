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

#include "ratlearn/policy.h"

namespace ratlearn {
namespace {

// SplitMix64 finalizer.
std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kPlay:
      return "play";
    case Phase::kExplore:
      return "explore";
    case Phase::kExploit:
      return "exploit";
    case Phase::kPunish:
      return "punish";
    case Phase::kDeviate:
      return "deviate";
  }
  return "unknown";
}

double RandomStream::Uniform(std::uint64_t counter, std::uint64_t draw) const {
  const std::uint64_t bits =
      Mix(Mix(Mix(Mix(seed_) ^ stream_) ^ counter) ^ draw);
  // Top 53 bits to a double in [0, 1).
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

RandomStream RandomStream::Substream(std::uint64_t tag) const {
  return RandomStream(seed_, Mix(stream_ ^ Mix(tag)));
}

}  // namespace ratlearn
