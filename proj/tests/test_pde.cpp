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

#include <cmath>

#include "doctest.h"

#include "bernstein/densities.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/pde.hpp"

using namespace bernstein;

namespace {

const ModelParams kBase{1.0, 0.5, 0.25, 0.8, 1.0};
const ModelParams kNegative{-1.3, 0.4, -0.9, -0.6, 0.7};

ModelParams with_x0(ModelParams p, double x0) {
  p.x0 = x0;
  return p;
}

}  // namespace

TEST_CASE("stencil ladder") {
  const StencilPolicy p;
  const auto h = p.ladder();
  REQUIRE(h.size() == 5);
  CHECK(h.front() == p.h0);
  CHECK(h.back() == doctest::Approx(p.h0 / 16));
  StencilPolicy bad;
  bad.levels = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("grids") {
  CHECK(standard_grid().size() == 25);
  CHECK(near_origin_grid().size() == 15);
}

TEST_CASE("closed forms certify on both grids and both signs of lambda") {
  for (const ModelParams& base : {kBase, kNegative}) {
    for (double x0 : {0.0, base.x0}) {
      const ModelParams p = with_x0(base, x0);
      const DerivedParams d = derive(p);
      const InitialCondition ic = InitialCondition::from(p);
      for (const auto& grid : {standard_grid(), near_origin_grid()}) {
        // Near q = 0 the second q-difference of rho reaches roundoff at h = 5e-4;
        // a ladder one level coarser stays in the truncation regime.
        StencilPolicy fp_policy;
        if (grid.size() != standard_grid().size()) fp_policy.h0 = 0.016;
        const auto c2 = residual_c2(d, ic, grid);
        CAPTURE(c2.fitted_order);
        CAPTURE(c2.finest());
        CHECK(c2.certified());
        const auto fp = residual_fokker_planck(d, grid, fp_policy);
        CAPTURE(base.lambda);
        CAPTURE(x0);
        CAPTURE(grid.size());
        CAPTURE(fp.fitted_order);
        CAPTURE(fp.finest());
        CAPTURE(fp.finest_extrapolated());
        CHECK(fp.certified());
      }
      const auto c1 = residual_c1(d, [&](double t, double q) { return eta(d, t, q); },
                                  standard_grid());
      CHECK(c1.certified());
    }
  }
}

TEST_CASE("perturbed candidates are rejected") {
  const DerivedParams d = derive(kBase);
  const InitialCondition ic = InitialCondition::from(kBase);
  const auto grid = standard_grid();
  const auto shifted = residual_c2(
      d, [&](double t, double q) { return eta_star(d, t, q, ic) * (1 + 0.01 * q); }, grid);
  CHECK_FALSE(shifted.certified());
  const auto wrong_sign = residual_c1(
      d, [&](double t, double q) { return eta_star(d, t, q, ic); }, grid);
  CHECK_FALSE(wrong_sign.certified());
}

TEST_CASE("order fit reports a straight line for a pure second-order error") {
  const DerivedParams d = derive(kBase);
  const auto rep = residual_c1(d, [&](double t, double q) { return eta(d, t, q); },
                               standard_grid());
  CHECK(rep.fitted_order > 1.8);
  CHECK(rep.fitted_order < 2.2);
  CHECK(rep.r2 > 0.99);
  CHECK(rep.residual_norms.size() == rep.steps.size());
  CHECK(rep.finest_extrapolated() < rep.finest());
}

TEST_CASE("Bessel ODE residuals") {
  std::vector<double> z;
  for (int j = 1; j <= 20; ++j) z.push_back(j);
  for (double nu : {-0.9, 0.3, 5.0}) {
    const auto r = residual_bessel_ode(nu, z);
    CHECK(r.series_residual < 1e-13);
    CHECK(r.stencil.fitted_order == doctest::Approx(2.0).epsilon(0.05));
    const auto j = residual_bessel_j_ode(std::abs(nu), z);
    CHECK(j.series_residual < 1e-12);
  }
}
