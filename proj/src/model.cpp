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

#include "bernstein/model.hpp"

#include <cmath>
#include <string>

#include "bernstein/errors.hpp"
#include "bernstein/specfun.hpp"

namespace bernstein {

namespace {

void check_tq(const char* what, double t, double q) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(what) + ": t must be > 0, got " +
                      std::to_string(t));
  }
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError(std::string(what) + ": q must be > 0, got " +
                      std::to_string(q));
  }
}

}  // namespace

void ModelParams::validate() const {
  for (double v : {alpha, beta, phi, lambda, x0}) {
    if (!std::isfinite(v)) throw DomainError("model: parameters must be finite");
  }
  if (alpha == 0.0) throw DomainError("model: alpha must be nonzero");
  if (lambda == 0.0) throw DomainError("model: lambda must be nonzero");
  if (x0 < 0.0) throw DomainError("model: x0 must be >= 0");
  const double phi_tilde = phi + lambda * beta / alpha;
  const double delta = 4.0 * phi_tilde / alpha;
  if (!(delta > 0.0)) {
    throw DomainError("model: BESQ dimension delta = 4*phi_tilde/alpha must be > 0, got " +
                      std::to_string(delta));
  }
}

DerivedParams derive(const ModelParams& params) {
  params.validate();
  DerivedParams d;
  d.params = params;
  const double alpha = params.alpha;
  d.phi_tilde = params.phi + params.lambda * params.beta / alpha;
  d.delta = 4.0 * d.phi_tilde / alpha;
  d.nu = d.delta / 2.0 - 1.0;
  const double a2 = alpha * alpha;
  d.A = a2 * a2 / 128.0 * (d.delta - 1.0) * (d.delta - 3.0);
  d.B = params.lambda * params.lambda / 8.0;
  d.theta = alpha / 2.0;
  d.z0 = std::sqrt(params.x0);
  return d;
}

InitialCondition InitialCondition::positive_start(double x0) {
  if (!(x0 > 0.0)) {
    throw DomainError("PositiveStart requires x0 > 0, got " + std::to_string(x0));
  }
  return InitialCondition(Kind::kPositiveStart, x0);
}

InitialCondition InitialCondition::from(const ModelParams& params) {
  return params.x0 > 0.0 ? positive_start(params.x0) : zero_start();
}

void InitialCondition::check_matches(const DerivedParams& d) const {
  if (is_zero() ? d.x0() != 0.0 : d.x0() != x0_) {
    throw ModelMismatch(
        std::string("initial condition ") + (is_zero() ? "ZeroStart" : "PositiveStart") +
        " does not match model x0=" + std::to_string(d.x0()));
  }
}

double besq_clock(const DerivedParams& d, double t) {
  const double a = d.alpha();
  const double l = d.lambda();
  return a * a * std::expm1(l * t) / (4.0 * l);
}

double potential_v(const DerivedParams& d, double q) {
  if (!(q > 0.0)) {
    throw DomainError("potential_v: q must be > 0, got " + std::to_string(q));
  }
  const double q2 = q * q;
  return d.A / q2 + d.B * q2;
}

double potential_v(const DerivedParams& d, double /*t*/, double q) {
  return potential_v(d, q);
}

double log_eta(const DerivedParams& d, double t, double q) {
  check_tq("eta", t, q);
  const double a = d.alpha();
  const double l = d.lambda();
  return l * d.delta * t / 4.0 - l * q * q / (a * a) +
         0.5 * (d.delta - 1.0) * std::log(q);
}

double eta(const DerivedParams& d, double t, double q) {
  return std::exp(log_eta(d, t, q));
}

double drift_forward(const DerivedParams& d, double t, double q) {
  check_tq("drift_forward", t, q);
  const double a = d.alpha();
  const double th2 = d.theta * d.theta;
  return th2 * ((d.delta - 1.0) / (2.0 * q) - 2.0 * d.lambda() * q / (a * a));
}

double drift_backward(const DerivedParams& d, double t, double q,
                      const InitialCondition& ic) {
  check_tq("drift_backward", t, q);
  ic.check_matches(d);
  const double a2 = d.alpha() * d.alpha();
  const double l = d.lambda();
  const double th2 = d.theta * d.theta;
  // lambda * coth(lambda t / 2) stays positive for either sign of lambda.
  const double l_coth = l / std::tanh(0.5 * l * t);
  if (ic.is_zero()) {
    return -th2 * ((d.delta - 1.0) / (2.0 * q) - 2.0 * q * l_coth / a2);
  }
  const double rate = l / std::expm1(l * t);
  const double kappa = 4.0 * rate * d.z0 * std::exp(0.5 * l * t) / a2;
  const BesselTriple i = bessel_i_scaled_all(d.nu, kappa * q);
  const double dlog_q = 0.5 / q - 2.0 * q * l_coth / a2 + kappa * i.d1 / i.value;
  return -th2 * dlog_q;
}

}  // namespace bernstein
