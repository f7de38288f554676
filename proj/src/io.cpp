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

#include "bernstein/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "bernstein/errors.hpp"

namespace bernstein {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// A JSON number, or null for values JSON cannot carry.
nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json numbers(const std::vector<double>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : vs) arr.push_back(number(v));
  return arr;
}

}  // namespace

ModelParams parse_params(std::string_view text) {
  static constexpr std::array<std::string_view, 5> kKeys = {"alpha", "beta", "phi",
                                                            "lambda", "x0"};
  std::map<std::string, double, std::less<>> values;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "params line " + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view raw = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
    }
    if (values.count(key) != 0) {
      throw ConfigError(where + ": duplicate key '" + std::string(key) + "'");
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (raw.empty() || ec != std::errc() || ptr != raw.data() + raw.size() ||
        !std::isfinite(v)) {
      throw ConfigError(where + ": '" + std::string(raw) + "' is not a decimal number");
    }
    values.emplace(std::string(key), v);
  }
  for (auto key : kKeys) {
    if (values.find(key) == values.end()) {
      throw ConfigError("params: missing key '" + std::string(key) + "'");
    }
  }
  return {values.at("alpha"), values.at("beta"), values.at("phi"),
          values.at("lambda"), values.at("x0")};
}

ModelParams read_params_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open params file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_params(ss.str());
}

std::string format_params(const ModelParams& p) {
  std::ostringstream os;
  os << "alpha=" << format_double(p.alpha) << '\n'
     << "beta=" << format_double(p.beta) << '\n'
     << "phi=" << format_double(p.phi) << '\n'
     << "lambda=" << format_double(p.lambda) << '\n'
     << "x0=" << format_double(p.x0) << '\n';
  return os.str();
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

nlohmann::json to_json(const ModelParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"phi", p.phi},
          {"lambda", p.lambda}, {"x0", p.x0}};
}

nlohmann::json to_json(const DerivedParams& d) {
  return {{"phi_tilde", d.phi_tilde}, {"delta", d.delta}, {"nu", d.nu},
          {"A", d.A}, {"B", d.B}, {"theta", d.theta}, {"z0", d.z0}};
}

nlohmann::json to_json(const ResidualReport& r, const std::optional<ModelParams>& params) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : r.points) points.push_back({{"t", p.t}, {"q", p.q}});
  nlohmann::json j;
  j["equation"] = to_string(r.equation);
  j["params"] = params ? to_json(*params) : nlohmann::json(nullptr);
  j["points"] = points;
  j["h"] = numbers(r.steps);
  j["residual_norm"] = numbers(r.residual_norms);
  j["extrapolated_norm"] = numbers(r.extrapolated_norms);
  j["fitted_order"] = number(r.fitted_order);
  j["r2"] = number(r.r2);
  return j;
}

nlohmann::json to_json(const KsResult& ks) {
  return {{"statistic", ks.statistic}, {"n", ks.n}, {"critical_0_01", ks.critical},
          {"rejects", ks.rejects()}};
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw ConfigError("write failed for " + path.string());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

void write_curve_csv(const std::filesystem::path& path, const DensityCurve& curve,
                     std::string_view abscissa) {
  std::string out;
  out.reserve(40 * (curve.values.size() + 1));
  out.append(abscissa).append(",value\n");
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    out.append(format_double(curve.grid[i])).push_back(',');
    out.append(format_double(curve.values[i])).push_back('\n');
  }
  write_text(path, out);
}

nlohmann::json curve_sidecar(const DensityCurve& curve, const ModelParams& params) {
  nlohmann::json j;
  j["law"] = curve.law;
  j["t"] = curve.t;
  j["grid"] = curve.grid.describe();
  j["params"] = to_json(params);
  j["normalization"] = curve.normalization ? number(*curve.normalization)
                                           : nlohmann::json(nullptr);
  j["normalization_tol"] = curve.normalization_tol;
  return j;
}

void write_samples_csv(const std::filesystem::path& path, const SampleSet& samples) {
  std::string out = "value\n";
  out.reserve(24 * (samples.values.size() + 1));
  for (double v : samples.values) out.append(format_double(v)).push_back('\n');
  write_text(path, out);
}

nlohmann::json samples_sidecar(const SampleSet& s) {
  nlohmann::json j;
  j["seed"] = s.seed;
  j["scheme"] = s.scheme.describe();
  j["n"] = s.n();
  j["t"] = s.t;
  j["law"] = to_string(s.law);
  if (s.params) {
    j["params"] = to_json(*s.params);
  } else {
    j["params"] = {{"delta", s.delta}, {"x0", s.x0}};
  }
  return j;
}

}  // namespace bernstein
