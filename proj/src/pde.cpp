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

#include "bernstein/pde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bernstein/densities.hpp"
#include "bernstein/errors.hpp"

namespace bernstein {

namespace {

// Least-squares slope of log(norm) on log(h) with its coefficient of
// determination.
void fit_order(ResidualReport& report) {
  const std::size_t n = report.steps.size();
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::log(report.steps[i]);
    y[i] = std::log(std::max(report.residual_norms[i], 1e-300));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  report.fitted_order = sxx > 0.0 ? sxy / sxx : 0.0;
  report.r2 = (sxx > 0.0 && syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
}

void check_points(std::span<const ResidualPoint> points) {
  if (points.empty()) throw DomainError("residual: no sample points");
  for (const auto& p : points) {
    if (!(p.t > 0.0) || !(p.q > 0.0)) {
      throw DomainError("residual: sample points must lie in (0, inf)^2");
    }
  }
}

// Runs `scaled_residual(point, h)` over the ladder and assembles the report.
template <typename Residual>
ResidualReport run_ladder(Equation eq, std::span<const ResidualPoint> points,
                          const StencilPolicy& policy, Residual&& scaled_residual) {
  policy.validate();
  check_points(points);
  ResidualReport report;
  report.equation = eq;
  report.points.assign(points.begin(), points.end());
  report.steps = policy.ladder();
  std::vector<std::vector<double>> per_point;
  for (double h : report.steps) {
    std::vector<double> r;
    r.reserve(points.size());
    double norm = 0.0;
    for (const auto& p : points) {
      const double v = scaled_residual(p, h);
      if (!std::isfinite(v)) {
        throw DomainError("residual: non-finite residual at t=" +
                          std::to_string(p.t) + " q=" + std::to_string(p.q));
      }
      r.push_back(v);
      norm = std::max(norm, std::abs(v));
    }
    report.residual_norms.push_back(norm);
    per_point.push_back(std::move(r));
  }
  for (std::size_t k = 0; k + 1 < per_point.size(); ++k) {
    double norm = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      norm = std::max(norm, std::abs((4.0 * per_point[k + 1][i] - per_point[k][i]) / 3.0));
    }
    report.extrapolated_norms.push_back(norm);
  }
  if (report.extrapolated_norms.empty()) {
    report.extrapolated_norms.push_back(report.residual_norms.back());
  }
  fit_order(report);
  return report;
}

double space_step(const DerivedParams& d, const ResidualPoint& p, double h) {
  return h * std::min(p.q, std::abs(d.theta) * std::sqrt(p.t));
}

// time_sign = +1 for the forward equation, -1 for the dual one.
ResidualReport heat_residual(Equation eq, double time_sign,
                             const DerivedParams& d, const ScalarField& f,
                             std::span<const ResidualPoint> points,
                             const StencilPolicy& policy) {
  const double th2 = d.theta * d.theta;
  const double th4_half = 0.5 * th2 * th2;
  return run_ladder(eq, points, policy, [&](const ResidualPoint& p, double h) {
    const double ht = policy.time_ratio * h * p.t;
    const double hq = space_step(d, p, h);
    const double f0 = f(p.t, p.q);
    const double ft = (f(p.t + ht, p.q) - f(p.t - ht, p.q)) / (2.0 * ht);
    const double fqq = (f(p.t, p.q + hq) - 2.0 * f0 + f(p.t, p.q - hq)) / (hq * hq);
    const double vf = potential_v(d, p.q) * f0;
    const double r = time_sign * th2 * ft + th4_half * fqq - vf;
    return r / std::max({1.0, std::abs(f0), std::abs(vf)});
  });
}

BesselOdeReport bessel_report(Equation eq, double order, double sign,
                              std::span<const double> z,
                              const StencilPolicy& policy,
                              const std::function<double(double)>& value,
                              const std::function<BesselTriple(double)>& triple) {
  BesselOdeReport out;
  out.order = order;
  out.z.assign(z.begin(), z.end());
  std::vector<ResidualPoint> pts;
  for (double x : z) {
    if (!(x > 0.0)) throw DomainError("bessel ode residual: z must be > 0");
    pts.push_back({1.0, x});
  }
  const double o2 = order * order;
  // sign = +1 gives the Bessel equation, -1 the modified one.
  auto ode = [&](double x, double w, double w1, double w2) {
    return x * x * w2 + x * w1 + (sign * x * x - o2) * w;
  };
  for (double x : z) {
    const BesselTriple b = triple(x);
    const double r = ode(x, b.value, b.d1, b.d2);
    out.series_residual =
        std::max(out.series_residual, std::abs(r) / std::max(1.0, x * x * std::abs(b.value)));
  }
  out.stencil = run_ladder(eq, pts, policy, [&](const ResidualPoint& p, double h) {
    const double x = p.q;
    const double hz = h * x;
    const double w0 = value(x);
    const double wp = value(x + hz);
    const double wm = value(x - hz);
    const double r = ode(x, w0, (wp - wm) / (2.0 * hz), (wp - 2.0 * w0 + wm) / (hz * hz));
    return r / std::max(1.0, x * x * std::abs(w0));
  });
  return out;
}

}  // namespace

std::string to_string(Equation eq) {
  switch (eq) {
    case Equation::kC1: return "C1";
    case Equation::kC2: return "C2";
    case Equation::kFokkerPlanck: return "FokkerPlanck";
    case Equation::kBesselODE: return "BesselODE";
    case Equation::kBesselJODE: return "BesselJODE";
  }
  return "unknown";
}

std::vector<double> StencilPolicy::ladder() const {
  std::vector<double> h;
  for (int k = 0; k < levels; ++k) h.push_back(h0 / std::pow(2.0, k));
  return h;
}

void StencilPolicy::validate() const {
  if (!(h0 > 0.0 && h0 < 1.0)) {
    throw DomainError("StencilPolicy: relative step h0 must lie in (0, 1)");
  }
  if (levels < 2) throw DomainError("StencilPolicy: need at least 2 levels");
  if (!(time_ratio > 0.0 && time_ratio <= 1.0)) {
    throw DomainError("StencilPolicy: time_ratio must lie in (0, 1]");
  }
}

bool ResidualReport::certified(double min_order, double threshold) const {
  return fitted_order >= min_order && finest() <= threshold;
}

ResidualReport residual_c1(const DerivedParams& d, const ScalarField& f,
                           std::span<const ResidualPoint> points,
                           const StencilPolicy& policy) {
  return heat_residual(Equation::kC1, 1.0, d, f, points, policy);
}

ResidualReport residual_c2(const DerivedParams& d, const ScalarField& f,
                           std::span<const ResidualPoint> points,
                           const StencilPolicy& policy) {
  return heat_residual(Equation::kC2, -1.0, d, f, points, policy);
}

ResidualReport residual_c2(const DerivedParams& d, const InitialCondition& ic,
                           std::span<const ResidualPoint> points,
                           const StencilPolicy& policy) {
  ic.check_matches(d);
  return residual_c2(
      d, [&](double t, double q) { return eta_star(d, t, q, ic); }, points, policy);
}

ResidualReport residual_fokker_planck(const DerivedParams& d,
                                      const ScalarField& density,
                                      const ScalarField& drift,
                                      std::span<const ResidualPoint> points,
                                      const StencilPolicy& policy) {
  const double half_th2 = 0.5 * d.theta * d.theta;
  return run_ladder(Equation::kFokkerPlanck, points, policy,
                    [&](const ResidualPoint& p, double h) {
    const double ht = policy.time_ratio * h * p.t;
    const double hq = space_step(d, p, h);
    const double r0 = density(p.t, p.q);
    const double rp = density(p.t, p.q + hq);
    const double rm = density(p.t, p.q - hq);
    const double rt = (density(p.t + ht, p.q) - density(p.t - ht, p.q)) / (2.0 * ht);
    const double flux = (drift(p.t, p.q + hq) * rp - drift(p.t, p.q - hq) * rm) / (2.0 * hq);
    const double rqq = (rp - 2.0 * r0 + rm) / (hq * hq);
    const double r = rt + flux - half_th2 * rqq;
    return r / std::max({1.0, std::abs(r0), std::abs(potential_v(d, p.q) * r0)});
  });
}

ResidualReport residual_fokker_planck(const DerivedParams& d,
                                      std::span<const ResidualPoint> points,
                                      const StencilPolicy& policy) {
  return residual_fokker_planck(
      d, [&](double t, double q) { return rho(d, t, q); },
      [&](double t, double q) { return drift_forward(d, t, q); }, points, policy);
}

BesselOdeReport residual_bessel_ode(double nu, std::span<const double> z,
                                    const StencilPolicy& policy,
                                    const SeriesPolicy& series) {
  return bessel_report(
      Equation::kBesselODE, nu, -1.0, z, policy,
      [&](double x) { return bessel_i(nu, x, series); },
      [&](double x) {
        const BesselTriple s = bessel_i_scaled_all(nu, x, series);
        const double g = std::exp(x);
        return BesselTriple{s.value * g, s.d1 * g, s.d2 * g};
      });
}

BesselOdeReport residual_bessel_j_ode(double lambda, std::span<const double> z,
                                      const StencilPolicy& policy,
                                      const SeriesPolicy& series) {
  return bessel_report(
      Equation::kBesselJODE, lambda, 1.0, z, policy,
      [&](double x) { return bessel_j(lambda, x, series); },
      [&](double x) { return bessel_j_all(lambda, x, series); });
}

std::vector<ResidualPoint> standard_grid() {
  std::vector<ResidualPoint> pts;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      pts.push_back({0.1 + 1.9 * i / 4.0, 0.1 + 2.9 * j / 4.0});
    }
  }
  return pts;
}

std::vector<ResidualPoint> near_origin_grid() {
  std::vector<ResidualPoint> pts;
  for (double t : {0.5, 1.0, 2.0}) {
    for (int j = 0; j < 5; ++j) pts.push_back({t, 0.01 + 0.09 * j / 4.0});
  }
  return pts;
}

}  // namespace bernstein
