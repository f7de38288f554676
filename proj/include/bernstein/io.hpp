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

#ifndef BERNSTEIN_IO_HPP_
#define BERNSTEIN_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bernstein/densities.hpp"
#include "bernstein/mc.hpp"
#include "bernstein/model.hpp"
#include "bernstein/pde.hpp"

namespace bernstein {

// Flat key=value params file with keys alpha, beta, phi, lambda, x0. Blank
// lines and '#' comments are ignored; unknown, duplicate or missing keys and
// malformed decimals raise ConfigError. The result is not validated.
ModelParams parse_params(std::string_view text);
ModelParams read_params_file(const std::filesystem::path& path);
std::string format_params(const ModelParams& params);

// Shortest round-trip-safe form: 17 significant digits.
std::string format_double(double v);

nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const DerivedParams& d);
nlohmann::json to_json(const ResidualReport& report,
                       const std::optional<ModelParams>& params = std::nullopt);
nlohmann::json to_json(const KsResult& ks);

// CSV with header "<abscissa>,value" and one row per grid point.
void write_curve_csv(const std::filesystem::path& path, const DensityCurve& curve,
                     std::string_view abscissa);
nlohmann::json curve_sidecar(const DensityCurve& curve, const ModelParams& params);

// CSV with a single "value" column.
void write_samples_csv(const std::filesystem::path& path, const SampleSet& samples);
nlohmann::json samples_sidecar(const SampleSet& samples);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace bernstein

#endif  // BERNSTEIN_IO_HPP_
