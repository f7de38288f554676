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

#include "bernstein/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bernstein/errors.hpp"
#include "bernstein/quadrature.hpp"
#include "bernstein/specfun.hpp"

namespace bernstein {

namespace {

constexpr int kPanels = 32;
constexpr double kTailRatio = 1e-16;

void require_positive(const char* what, const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + ": " + name + " must be > 0, got " +
                      std::to_string(v));
  }
}

// lambda / (e^{lambda t} - 1), positive for either sign of lambda.
double log_rate(const DerivedParams& d, double t) {
  const double l = d.lambda();
  return std::log(std::abs(l)) - std::log(std::abs(std::expm1(l * t)));
}

// 2 lambda e^{lambda t} / (alpha^2 (e^{lambda t} - 1)), i.e. e^{lambda t} / (2 s).
double gaussian_coeff(const DerivedParams& d, double t) {
  const double l = d.lambda();
  const double a2 = d.alpha() * d.alpha();
  return -2.0 * l / (a2 * std::expm1(-l * t));
}

QuadOptions panel_options() {
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-13;
  return o;
}

// Integral of f over [0, upper], with f ~ v^power at the origin, split on a
// fixed partition of [0, cutoff].
double integrate_law(const Integrand& f, double power, double cutoff,
                     double upper) {
  const QuadOptions opts = panel_options();
  const double step = cutoff / kPanels;
  const double first = std::min(step, upper);
  double total = integrate_power_singular(f, first, power, opts).value;
  double lo = first;
  for (int i = 2; lo < upper; ++i) {
    const double hi = std::min(step * i, upper);
    total += integrate(f, lo, hi, opts).value;
    lo = hi;
    if (i > kPanels) break;
  }
  return total;
}

}  // namespace

double log_besq_density(double delta, double t, double x0, double y) {
  require_positive("besq_density", "delta", delta);
  require_positive("besq_density", "t", t);
  require_positive("besq_density", "y", y);
  if (!(x0 >= 0.0) || !std::isfinite(x0)) {
    throw DomainError("besq_density: x0 must be >= 0");
  }
  const double h = 0.5 * delta;
  if (x0 == 0.0) {
    return -h * std::log(2.0 * t) - log_gamma(h) + (h - 1.0) * std::log(y) -
           y / (2.0 * t);
  }
  const double nu = h - 1.0;
  const double z = std::sqrt(x0 * y) / t;
  const double root_gap = std::sqrt(y) - std::sqrt(x0);
  // -(x0 + y)/(2t) + z folded into a single square.
  return -std::log(2.0 * t) + 0.5 * nu * std::log(y / x0) -
         root_gap * root_gap / (2.0 * t) + std::log(bessel_i_scaled(nu, z));
}

double besq_density(double delta, double t, double x0, double y) {
  return std::exp(log_besq_density(delta, t, x0, y));
}

double log_x_density(const DerivedParams& d, double t, double x) {
  require_positive("x_density", "t", t);
  require_positive("x_density", "x", x);
  const double l = d.lambda();
  if (d.x0() > 0.0) {
    return l * t + log_besq_density(d.delta, besq_clock(d, t), d.x0(),
                                    x * std::exp(l * t));
  }
  const double h = 0.5 * d.delta;
  const double a2 = d.alpha() * d.alpha();
  // alpha^{-delta} (2 lambda)^{delta/2} (e^{lambda t} - 1)^{-delta/2}
  const double log_scale = h * (std::log(2.0 / a2) + log_rate(d, t));
  return log_scale - log_gamma(h) + (h - 1.0) * std::log(x) +
         l * d.delta * t / 2.0 - gaussian_coeff(d, t) * x;
}

double x_density(const DerivedParams& d, double t, double x) {
  return std::exp(log_x_density(d, t, x));
}

double log_rho_zero(const DerivedParams& d, double t, double q) {
  require_positive("rho_zero", "t", t);
  require_positive("rho_zero", "q", q);
  if (d.x0() != 0.0) {
    throw ModelMismatch("rho_zero: model has x0 > 0; use rho_positive");
  }
  const double h = 0.5 * d.delta;
  const double a2 = d.alpha() * d.alpha();
  // alpha^{-delta} 2^{delta/2 + 1} lambda^{delta/2} (e^{lambda t} - 1)^{-delta/2}
  const double log_scale =
      std::numbers::ln2 + h * (std::log(2.0 / a2) + log_rate(d, t));
  return log_scale - log_gamma(h) + (d.delta - 1.0) * std::log(q) +
         d.lambda() * d.delta * t / 2.0 - gaussian_coeff(d, t) * q * q;
}

double rho_zero(const DerivedParams& d, double t, double q) {
  return std::exp(log_rho_zero(d, t, q));
}

double log_rho_positive(const DerivedParams& d, double t, double q) {
  require_positive("rho_positive", "t", t);
  require_positive("rho_positive", "q", q);
  if (!(d.x0() > 0.0)) {
    throw ModelMismatch("rho_positive: model has x0 == 0; use rho_zero");
  }
  const double l = d.lambda();
  const double a2 = d.alpha() * d.alpha();
  const double lr = log_rate(d, t);
  const double rate = std::exp(lr);
  const double half_growth = std::exp(0.5 * l * t);
  const double kappa = 4.0 * rate * d.z0 * half_growth / a2;
  const double gap = d.z0 - half_growth * q;
  // I_nu(kappa q) exp(-2 rate (z0^2 + e^{lambda t} q^2) / alpha^2)
  //   = Ie_nu(kappa q) exp(-2 rate (z0 - e^{lambda t/2} q)^2 / alpha^2)
  return std::log(4.0 / a2) + lr - d.nu * std::log(d.z0) +
         l * t * (d.delta / 4.0 + 0.5) + 0.5 * d.delta * std::log(q) +
         std::log(bessel_i_scaled(d.nu, kappa * q)) - 2.0 * rate * gap * gap / a2;
}

double rho_positive(const DerivedParams& d, double t, double q) {
  return std::exp(log_rho_positive(d, t, q));
}

double log_rho(const DerivedParams& d, double t, double q) {
  return d.x0() > 0.0 ? log_rho_positive(d, t, q) : log_rho_zero(d, t, q);
}

double rho(const DerivedParams& d, double t, double q) {
  return std::exp(log_rho(d, t, q));
}

double log_eta_star(const DerivedParams& d, double t, double q,
                    const InitialCondition& ic) {
  require_positive("eta_star", "t", t);
  require_positive("eta_star", "q", q);
  ic.check_matches(d);
  const double l = d.lambda();
  const double a2 = d.alpha() * d.alpha();
  const double lr = log_rate(d, t);
  if (ic.is_zero()) {
    const double h = 0.5 * d.delta;
    const double l_coth = l / std::tanh(0.5 * l * t);
    return std::numbers::ln2 + h * (std::log(2.0 / a2) + lr) - log_gamma(h) +
           0.5 * (d.delta - 1.0) * std::log(q) + l * d.delta * t / 4.0 -
           l_coth * q * q / a2;
  }
  const double rate = std::exp(lr);
  const double half_growth = std::exp(0.5 * l * t);
  const double kappa = 4.0 * rate * d.z0 * half_growth / a2;
  const double gap = d.z0 - half_growth * q;
  return std::log(4.0 / a2) + lr - d.nu * std::log(d.z0) + 0.5 * l * t +
         std::log(bessel_i_scaled(d.nu, kappa * q)) + 0.5 * std::log(q) +
         l * q * q / a2 - 2.0 * rate * gap * gap / a2;
}

double eta_star(const DerivedParams& d, double t, double q,
                const InitialCondition& ic) {
  return std::exp(log_eta_star(d, t, q, ic));
}

std::string to_string(Law law) {
  switch (law) {
    case Law::kBesq: return "besq";
    case Law::kX: return "x";
    case Law::kZ: return "z";
  }
  return "unknown";
}

double LawSpec::density(double v) const {
  switch (law) {
    case Law::kBesq: return besq_density(model.delta, t, model.x0(), v);
    case Law::kX: return x_density(model, t, v);
    case Law::kZ: return rho(model, t, v);
  }
  return 0.0;
}

double LawSpec::origin_power() const {
  return law == Law::kZ ? model.delta - 1.0 : 0.5 * model.delta - 1.0;
}

double LawSpec::moment() const {
  if (law == Law::kBesq) return model.x0() + model.delta * t;
  const double decay = std::exp(-model.lambda() * t);
  return decay * (model.x0() + model.delta * besq_clock(model, t));
}

double LawSpec::upper_cutoff() const {
  const double base = law == Law::kZ ? std::sqrt(moment()) : moment();
  double upper = 2.0 * std::max(base, 1e-300);
  constexpr int kProbe = 256;
  for (int attempt = 0; attempt < 400; ++attempt, upper *= 1.5) {
    double peak = 0.0;
    int peak_at = 0;
    for (int i = 1; i <= kProbe; ++i) {
      const double f = density(upper * i / kProbe);
      if (f > peak) {
        peak = f;
        peak_at = i;
      }
    }
    if (peak_at < kProbe * 3 / 4 && density(upper) < kTailRatio * peak) {
      return upper;
    }
  }
  throw QuadratureError("upper_cutoff: density tail did not decay");
}

double cdf(const LawSpec& spec, double v) {
  if (!(v > 0.0)) {
    throw DomainError("cdf: abscissa must be > 0, got " + std::to_string(v));
  }
  const double cutoff = spec.upper_cutoff();
  auto f = [&](double x) { return spec.density(x); };
  return std::clamp(integrate_law(f, spec.origin_power(), cutoff,
                                  std::min(v, cutoff)),
                    0.0, 1.0);
}

double normalization(const LawSpec& spec) {
  const double cutoff = spec.upper_cutoff();
  auto f = [&](double x) { return spec.density(x); };
  return integrate_law(f, spec.origin_power(), cutoff, cutoff);
}

double raw_moment(const LawSpec& spec, int k) {
  if (k < 0) throw DomainError("raw_moment: order must be >= 0");
  const double cutoff = spec.upper_cutoff();
  auto f = [&](double x) { return std::pow(x, k) * spec.density(x); };
  return integrate_law(f, spec.origin_power() + k, cutoff, cutoff);
}

TabulatedCdf::TabulatedCdf(const LawSpec& spec, int nodes)
    : spec_(spec),
      cutoff_(spec.upper_cutoff()),
      exponent_(std::min(1.0, spec.origin_power() + 1.0)),
      du_(1.0 / nodes),
      cdf_(static_cast<std::size_t>(nodes) + 1, 0.0),
      slope_(static_cast<std::size_t>(nodes) + 1, 0.0) {
  if (nodes < 2) throw DomainError("TabulatedCdf: need at least 2 nodes");
  const QuadOptions opts = panel_options();
  auto f = [this](double x) { return spec_.density(x); };
  const double inv_k = 1.0 / exponent_;
  auto v_at = [&](int i) { return cutoff_ * std::pow(i * du_, inv_k); };
  cdf_[1] = integrate_power_singular(f, v_at(1), spec.origin_power(), opts).value;
  for (int i = 2; i <= nodes; ++i) {
    cdf_[i] = cdf_[i - 1] + integrate(f, v_at(i - 1), v_at(i), opts).value;
  }
  for (int i = 1; i <= nodes; ++i) {
    const double u = i * du_;
    slope_[i] = f(v_at(i)) * cutoff_ * inv_k * std::pow(u, inv_k - 1.0);
  }
}

double TabulatedCdf::to_u(double v) const {
  return std::pow(v / cutoff_, exponent_);
}

double TabulatedCdf::operator()(double v) const {
  if (!(v > 0.0)) return 0.0;
  const double u = to_u(v);
  const int n = static_cast<int>(cdf_.size()) - 1;
  if (u >= 1.0) return std::min(cdf_[n], 1.0);
  const int i = std::min(static_cast<int>(u / du_), n - 1);
  if (i == 0) {
    auto f = [this](double x) { return spec_.density(x); };
    return integrate_power_singular(f, v, spec_.origin_power(), panel_options()).value;
  }
  // Cubic Hermite on [u_i, u_{i+1}].
  const double s = (u - i * du_) / du_;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  const double value = h00 * cdf_[i] + h10 * du_ * slope_[i] +
                       h01 * cdf_[i + 1] + h11 * du_ * slope_[i + 1];
  return std::clamp(value, 0.0, 1.0);
}

DensityCurve tabulate(const LawSpec& spec, const Grid1D& grid) {
  DensityCurve curve{grid, {}, spec.t, to_string(spec.law), std::nullopt, 1e-8};
  curve.values.reserve(grid.size());
  for (double v : grid.points()) curve.values.push_back(spec.density(v));
  curve.normalization = normalization(spec);
  return curve;
}

}  // namespace bernstein
