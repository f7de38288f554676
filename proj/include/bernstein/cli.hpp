// Copyright 2026 The Bernstein Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERNSTEIN_CLI_HPP_
#define BERNSTEIN_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bernstein {

// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumeric = 3,
  kExitCertification = 4,
  kExitStatistical = 5,
};

// Entry point for the `bernstein` tool. `args` excludes the program name,
// e.g. {"density", "--law", "z", "--t", "1"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bernstein

#endif  // BERNSTEIN_CLI_HPP_
