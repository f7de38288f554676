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

#include "bernstein/grid.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "bernstein/errors.hpp"

namespace bernstein {

namespace {

void check_range(double a, double b, int n) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    throw DomainError("grid: need 0 < a < b, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  }
  if (n < 2) throw DomainError("grid: need at least 2 points");
}

double parse_double(std::string_view s, std::string_view spec) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("grid spec '" + std::string(spec) + "': bad number '" +
                      std::string(s) + "'");
  }
  return v;
}

}  // namespace

Grid1D Grid1D::linear(double a, double b, int n) {
  check_range(a, b, n);
  std::vector<double> p(static_cast<std::size_t>(n));
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) p[i] = a + step * i;
  p.back() = b;
  return Grid1D(std::move(p), Spacing::kLinear);
}

Grid1D Grid1D::logarithmic(double a, double b, int n) {
  check_range(a, b, n);
  std::vector<double> p(static_cast<std::size_t>(n));
  const double la = std::log(a);
  const double step = (std::log(b) - la) / (n - 1);
  for (int i = 0; i < n; ++i) p[i] = std::exp(la + step * i);
  p.front() = a;
  p.back() = b;
  return Grid1D(std::move(p), Spacing::kLog);
}

Grid1D Grid1D::custom(std::vector<double> points) {
  if (points.empty()) throw DomainError("grid: no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0) || !std::isfinite(points[i])) {
      throw DomainError("grid: points must be finite and > 0");
    }
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw DomainError("grid: points must be strictly increasing");
    }
  }
  return Grid1D(std::move(points), Spacing::kCustom);
}

Grid1D Grid1D::parse(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4 || (parts[0] != "lin" && parts[0] != "log")) {
    throw ConfigError("grid spec '" + std::string(spec) +
                      "' must look like lin:a:b:n or log:a:b:n");
  }
  const double a = parse_double(parts[1], spec);
  const double b = parse_double(parts[2], spec);
  int n = 0;
  const auto [ptr, ec] =
      std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), n);
  if (ec != std::errc() || ptr != parts[3].data() + parts[3].size()) {
    throw ConfigError("grid spec '" + std::string(spec) + "': bad count");
  }
  try {
    return parts[0] == "lin" ? linear(a, b, n) : logarithmic(a, b, n);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("grid spec '") + std::string(spec) + "': " + e.what());
  }
}

std::string Grid1D::describe() const {
  std::ostringstream os;
  switch (spacing_) {
    case Spacing::kLinear: os << "lin"; break;
    case Spacing::kLog: os << "log"; break;
    case Spacing::kCustom: os << "custom"; break;
  }
  os << ':' << points_.front() << ':' << points_.back() << ':' << points_.size();
  return os.str();
}

}  // namespace bernstein
