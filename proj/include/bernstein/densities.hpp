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

#ifndef BERNSTEIN_DENSITIES_HPP_
#define BERNSTEIN_DENSITIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bernstein/grid.hpp"
#include "bernstein/model.hpp"

namespace bernstein {

// Transition density of BESQ^delta started at x0, evaluated at y after time t.
double besq_density(double delta, double t, double x0, double y);
double log_besq_density(double delta, double t, double x0, double y);

// Density of X_t = e^{-lambda t} Y(s) at x.
double x_density(const DerivedParams& d, double t, double x);
double log_x_density(const DerivedParams& d, double t, double x);

// Density of Z_t = sqrt(X_t) started at the origin. Throws ModelMismatch
// if the model has x0 > 0.
double rho_zero(const DerivedParams& d, double t, double q);
double log_rho_zero(const DerivedParams& d, double t, double q);

// Density of Z_t for x0 > 0. Throws ModelMismatch if x0 == 0.
double rho_positive(const DerivedParams& d, double t, double q);
double log_rho_positive(const DerivedParams& d, double t, double q);

// Dispatches on the model's x0.
double rho(const DerivedParams& d, double t, double q);
double log_rho(const DerivedParams& d, double t, double q);

// Backward solution, evaluated from its own closed form (not as rho / eta).
double eta_star(const DerivedParams& d, double t, double q,
                const InitialCondition& ic);
double log_eta_star(const DerivedParams& d, double t, double q,
                    const InitialCondition& ic);

enum class Law { kBesq, kX, kZ };

std::string to_string(Law law);

// A probability law at a fixed time: BESQ^delta(x0) at time t, X_t or Z_t.
struct LawSpec {
  Law law = Law::kZ;
  DerivedParams model;
  double t = 1.0;

  double density(double v) const;
  // Exponent p of the v^p behavior of the density at the origin.
  double origin_power() const;
  // Exact second moment of the variable (Z), or exact mean (BESQ, X).
  double moment() const;
  // Abscissa beyond which the density has dropped below 1e-16 of its peak.
  double upper_cutoff() const;
};

// P(V <= v) by adaptive quadrature; absolute error below 1e-9.
double cdf(const LawSpec& spec, double v);
// Total mass over (0, infinity).
double normalization(const LawSpec& spec);
// Integral of v^k * density over (0, infinity).
double raw_moment(const LawSpec& spec, int k);

// Dense CDF table for repeated evaluation (KS tests): exact quadrature at
// nodes, cubic Hermite in between using the density as derivative.
class TabulatedCdf {
 public:
  explicit TabulatedCdf(const LawSpec& spec, int nodes = 4096);
  double operator()(double v) const;
  const LawSpec& spec() const { return spec_; }

 private:
  double to_u(double v) const;
  LawSpec spec_;
  double cutoff_;
  double exponent_;  // v = cutoff * u^{1/exponent}
  double du_;
  std::vector<double> cdf_;
  std::vector<double> slope_;  // dF/du at nodes
};

// Tabulated law on a grid plus its quadrature normalization.
struct DensityCurve {
  Grid1D grid;
  std::vector<double> values;
  double t = 0.0;
  std::string law;
  std::optional<double> normalization;
  double normalization_tol = 1e-8;
};

DensityCurve tabulate(const LawSpec& spec, const Grid1D& grid);

}  // namespace bernstein

#endif  // BERNSTEIN_DENSITIES_HPP_
