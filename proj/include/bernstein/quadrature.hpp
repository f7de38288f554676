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

#ifndef BERNSTEIN_QUADRATURE_HPP_
#define BERNSTEIN_QUADRATURE_HPP_

#include <functional>

namespace bernstein {

struct QuadOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b]. Throws
// QuadratureError if the error estimate cannot be brought below
// max(abs_tol, rel_tol * |value|).
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadOptions& options = {});

// Integral of f over [0, b] when f(q) behaves like q^power near the origin
// (power > -1). The substitution q = b u^{1/(power+1)} absorbs the
// singular factor before the adaptive rule is applied.
QuadResult integrate_power_singular(const Integrand& f, double b, double power,
                                    const QuadOptions& options = {});

}  // namespace bernstein

#endif  // BERNSTEIN_QUADRATURE_HPP_
