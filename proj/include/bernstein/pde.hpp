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

#ifndef BERNSTEIN_PDE_HPP_
#define BERNSTEIN_PDE_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bernstein/model.hpp"
#include "bernstein/specfun.hpp"

namespace bernstein {

enum class Equation { kC1, kC2, kFokkerPlanck, kBesselODE, kBesselJODE };

std::string to_string(Equation eq);

struct ResidualPoint {
  double t = 0.0;
  double q = 0.0;
};

// Central second-order stencils on a geometric ladder h0, h0/2, ... Steps are
// relative to each sample point: the space step is h*min(q, |theta| sqrt(t)),
// the smaller of the distance to the origin and the diffusion length over
// [0, t], and the time step is time_ratio*h*t. For the Bessel ODE the step
// is h*z.
struct StencilPolicy {
  double h0 = 8e-3;
  int levels = 5;
  double time_ratio = 0.1;

  std::vector<double> ladder() const;
  void validate() const;
};

struct ResidualReport {
  Equation equation = Equation::kC1;
  std::vector<ResidualPoint> points;
  std::vector<double> steps;           // strictly decreasing
  std::vector<double> residual_norms;  // max scaled |residual| per step
  // Richardson combination (4 r(h/2) - r(h)) / 3 between consecutive steps.
  std::vector<double> extrapolated_norms;
  double fitted_order = 0.0;  // slope of log residual vs log h
  double r2 = 0.0;

  double finest() const { return residual_norms.back(); }
  double finest_extrapolated() const { return extrapolated_norms.back(); }
  // Order at least min_order and finest residual at most threshold.
  bool certified(double min_order = 1.8, double threshold = 1e-6) const;
};

using ScalarField = std::function<double(double t, double q)>;

// theta^2 f_t + (theta^4/2) f_qq - V f, scaled by max(1, |f|, |V f|).
ResidualReport residual_c1(const DerivedParams& d, const ScalarField& f,
                           std::span<const ResidualPoint> points,
                           const StencilPolicy& policy = {});

// -theta^2 f_t + (theta^4/2) f_qq - V f, scaled the same way.
ResidualReport residual_c2(const DerivedParams& d, const ScalarField& f,
                           std::span<const ResidualPoint> points,
                           const StencilPolicy& policy = {});
// Convenience: f = eta_star for the given branch.
ResidualReport residual_c2(const DerivedParams& d, const InitialCondition& ic,
                           std::span<const ResidualPoint> points,
                           const StencilPolicy& policy = {});

// rho_t + d/dq (drift rho) - (theta^2/2) rho_qq for an arbitrary density and
// drift; residual scaled by max(1, |rho|, |V rho|).
ResidualReport residual_fokker_planck(const DerivedParams& d,
                                      const ScalarField& density,
                                      const ScalarField& drift,
                                      std::span<const ResidualPoint> points,
                                      const StencilPolicy& policy = {});
// Closed-form rho with the forward drift.
ResidualReport residual_fokker_planck(const DerivedParams& d,
                                      std::span<const ResidualPoint> points,
                                      const StencilPolicy& policy = {});

struct BesselOdeReport {
  double order = 0.0;
  std::vector<double> z;
  // max over z of |ODE residual| / max(1, z^2 |w|) with series derivatives.
  double series_residual = 0.0;
  // Same with stencil derivatives of the series value, across the ladder.
  ResidualReport stencil;
};

// z^2 I'' + z I' - (z^2 + nu^2) I for nu > -1.
BesselOdeReport residual_bessel_ode(double nu, std::span<const double> z,
                                    const StencilPolicy& policy = {},
                                    const SeriesPolicy& series = {});
// z^2 J'' + z J' + (z^2 - lambda^2) J for lambda >= 0.
BesselOdeReport residual_bessel_j_ode(double lambda, std::span<const double> z,
                                      const StencilPolicy& policy = {},
                                      const SeriesPolicy& series = {});

// 5x5 grid over [0.1, 2] x [0.1, 3].
std::vector<ResidualPoint> standard_grid();
// q in [0.01, 0.1] at t in {0.5, 1, 2}.
std::vector<ResidualPoint> near_origin_grid();

}  // namespace bernstein

#endif  // BERNSTEIN_PDE_HPP_
