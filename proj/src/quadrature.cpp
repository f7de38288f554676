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

#include "bernstein/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "bernstein/errors.hpp"

namespace bernstein {

namespace {

// Kronrod nodes on [0, 1] (positive half, center last) and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes, center last.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadOptions& options) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw QuadratureError("integrate: limits must be finite");
  }
  if (a == b) return {};
  if (b < a) {
    QuadResult r = integrate(f, b, a, options);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Panel> panels;
  Panel first = gk15(f, a, b);
  double total = first.value;
  double error = first.error;
  panels.push(first);
  int evaluations = 15;

  while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
    if (static_cast<int>(panels.size()) >= options.max_subdivisions) {
      throw QuadratureError("integrate: tolerance not reached on [" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            "], error estimate " + std::to_string(error));
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw QuadratureError("integrate: panel width underflow near " +
                            std::to_string(mid));
    }
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the incremental updates.
  total = 0.0;
  error = 0.0;
  for (; !panels.empty(); panels.pop()) {
    total += panels.top().value;
    error += panels.top().error;
  }
  if (!std::isfinite(total)) {
    throw QuadratureError("integrate: integrand produced a non-finite value");
  }
  return {total, error, evaluations};
}

QuadResult integrate_power_singular(const Integrand& f, double b, double power,
                                    const QuadOptions& options) {
  if (!(power > -1.0)) {
    throw QuadratureError("integrate_power_singular: power must be > -1");
  }
  if (!(b > 0.0)) return {};
  const double k = power + 1.0;
  const double inv_k = 1.0 / k;
  // dq = (b / k) u^{1/k - 1} du
  auto g = [&](double u) {
    const double q = b * std::pow(u, inv_k);
    return f(q) * (b * inv_k) * std::pow(u, inv_k - 1.0);
  };
  return integrate(g, 0.0, 1.0, options);
}

}  // namespace bernstein
