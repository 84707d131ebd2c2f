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

// Command-line front end. The `ratlearn` binary is a thin wrapper around
// RunCli so that the commands can be exercised in-process by tests.
//
//   ratlearn run CONFIG [flags]
//   ratlearn scenario NAME [flags]
//   ratlearn ratio GAME ALGORITHM ADVERSARY [flags]

#ifndef RATLEARN_CLI_H_
#define RATLEARN_CLI_H_

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratlearn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat "key = value" text; '#' starts a comment, blank lines are skipped.
// Throws ConfigError on a line without '=' or a repeated key.
std::map<std::string, std::string> ParseKeyValueConfig(const std::string& text);

const std::vector<std::string>& ScenarioNames();

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ratlearn

#endif  // RATLEARN_CLI_H_
