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

#ifndef BERNSTEIN_GRID_HPP_
#define BERNSTEIN_GRID_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bernstein {

// Strictly increasing, strictly positive evaluation abscissae.
class Grid1D {
 public:
  enum class Spacing { kLinear, kLog, kCustom };

  // n >= 2 points from a to b inclusive, 0 < a < b.
  static Grid1D linear(double a, double b, int n);
  static Grid1D logarithmic(double a, double b, int n);
  // Throws DomainError unless points are strictly increasing and positive.
  static Grid1D custom(std::vector<double> points);
  // "lin:a:b:n" or "log:a:b:n"; throws ConfigError on malformed specs.
  static Grid1D parse(std::string_view spec);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  Spacing spacing() const { return spacing_; }
  std::string describe() const;

 private:
  Grid1D(std::vector<double> points, Spacing spacing)
      : points_(std::move(points)), spacing_(spacing) {}
  std::vector<double> points_;
  Spacing spacing_;
};

}  // namespace bernstein

#endif  // BERNSTEIN_GRID_HPP_
