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

#ifndef BERNSTEIN_VERIFY_HPP_
#define BERNSTEIN_VERIFY_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "bernstein/model.hpp"

namespace bernstein {

// Reference model used when no params file is given: delta = 2.6, x0 = 1.
ModelParams default_params();

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Statistical checks fail with exit code 5 rather than 4.
  bool statistical = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  ModelParams params = default_params();
  std::uint64_t seed = 42;
  // Scratch space for the byte-determinism check.
  std::filesystem::path scratch_dir = std::filesystem::temp_directory_path();
};

// The ten acceptance checks, in order. Every tolerance is fixed in code.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options);

nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace bernstein

#endif  // BERNSTEIN_VERIFY_HPP_
