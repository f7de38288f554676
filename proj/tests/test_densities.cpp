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
#include <numbers>

#include "doctest.h"

#include "bernstein/densities.hpp"
#include "bernstein/errors.hpp"

using namespace bernstein;

namespace {

const ModelParams kBase{1.0, 0.5, 0.25, 0.8, 1.0};
const ModelParams kNegative{-1.3, 0.4, -0.9, -0.6, 0.7};

ModelParams with_x0(ModelParams p, double x0) {
  p.x0 = x0;
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi); }

}  // namespace

TEST_CASE("dimension two from the origin is exponential") {
  for (double t : {0.3, 1.0, 4.0}) {
    for (double y : {0.01, 1.0, 7.0}) {
      CHECK(rel(besq_density(2.0, t, 0.0, y), std::exp(-y / (2 * t)) / (2 * t)) < 1e-14);
    }
    const DerivedParams d = derive({1.0, 0.0, 0.5, 0.8, 0.0});  // delta = 2
    CHECK(std::abs(cdf({Law::kBesq, d, t}, 1.5) - (-std::expm1(-1.5 / (2 * t)))) < 1e-10);
  }
}

TEST_CASE("dimension one is a squared Brownian motion") {
  for (double x0 : {0.0, 0.4, 2.0}) {
    for (double y : {0.05, 0.8, 3.0}) {
      const double t = 0.7, w = std::sqrt(y), s = std::sqrt(t), m = std::sqrt(x0);
      const double ref = (normal_pdf((w - m) / s) + normal_pdf((w + m) / s)) / (2 * w * s);
      CHECK(rel(besq_density(1.0, t, x0, y), ref) < 1e-13);
    }
  }
}

TEST_CASE("frozen high-precision values") {
  CHECK(rel(besq_density(0.5, 1.3, 0.7, 0.4), 0.33052013351591410269) < 1e-13);
  struct Row {
    double t, q, x0, value;
  };
  const Row rows[] = {{1, 0.7, 0, 1.2135285386376420189},
                      {1, 0.7, 1, 1.0289792971179434097},
                      {0.25, 1.5, 1, 0.11055350090380333018},
                      {4, 0.2, 0, 0.30869781137676104486},
                      {2, 2.0, 1, 0.021834869920003806669}};
  for (const Row& r : rows) {
    CAPTURE(r.t);
    CAPTURE(r.q);
    CHECK(rel(rho(derive(with_x0(kBase, r.x0)), r.t, r.q), r.value) < 1e-13);
  }
}

TEST_CASE("change of variables from BESQ to X to Z") {
  for (const ModelParams& base : {kBase, kNegative}) {
    for (double x0 : {0.0, base.x0}) {
      const DerivedParams d = derive(with_x0(base, x0));
      const double t = 1.1, s = besq_clock(d, t), el = std::exp(d.lambda() * t);
      for (double q : {0.2, 0.9, 1.7}) {
        const double x = q * q;
        CHECK(rel(x_density(d, t, x), el * besq_density(d.delta, s, x0, x * el)) < 1e-13);
        CHECK(rel(rho(d, t, q), 2 * q * x_density(d, t, x)) < 1e-13);
      }
    }
  }
}

TEST_CASE("branch guards") {
  CHECK_THROWS_AS(rho_zero(derive(kBase), 1.0, 0.5), ModelMismatch);
  CHECK_THROWS_AS(rho_positive(derive(with_x0(kBase, 0.0)), 1.0, 0.5), ModelMismatch);
  CHECK_THROWS_AS(eta_star(derive(kBase), 1.0, 0.5, InitialCondition::zero_start()),
                  ModelMismatch);
}

TEST_CASE("eta times eta_star is the law of Z") {
  for (const ModelParams& base : {kBase, kNegative}) {
    for (double x0 : {0.0, base.x0}) {
      const ModelParams p = with_x0(base, x0);
      const DerivedParams d = derive(p);
      const InitialCondition ic = InitialCondition::from(p);
      for (double t : {0.1, 1.0, 3.7}) {
        for (double q : {0.05, 0.6, 2.9}) {
          CHECK(rel(eta(d, t, q) * eta_star(d, t, q, ic), rho(d, t, q)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("positive start tends to zero start") {
  const DerivedParams zero = derive(with_x0(kBase, 0.0));
  const DerivedParams tiny = derive(with_x0(kBase, 1e-10));
  for (double q : {0.1, 1.0, 3.0}) {
    CHECK(rel(rho_positive(tiny, 1.0, q), rho_zero(zero, 1.0, q)) < 1e-7);
  }
}

TEST_CASE("mass and moments, including negative lambda and delta below one") {
  ModelParams low = kBase;
  low.phi = 0.5 / 4 - 0.4;  // delta = 0.5
  for (const ModelParams& base : {kBase, kNegative, low}) {
    for (double x0 : {0.0, 1.0}) {
      const DerivedParams d = derive(with_x0(base, x0));
      for (Law law : {Law::kBesq, Law::kX, Law::kZ}) {
        const LawSpec spec{law, d, 0.8};
        CAPTURE(to_string(law));
        CHECK(std::abs(normalization(spec) - 1.0) < 1e-10);
        const double m = raw_moment(spec, law == Law::kZ ? 2 : 1);
        CHECK(rel(m, spec.moment()) < 1e-9);
      }
    }
  }
}

TEST_CASE("tabulated cdf agrees with direct quadrature") {
  for (double x0 : {0.0, 1.0}) {
    const LawSpec spec{Law::kZ, derive(with_x0(kBase, x0)), 1.0};
    const TabulatedCdf table(spec);
    for (double v : {1e-4, 0.03, 0.4, 1.0, 1.77, 3.2, 10.0}) {
      CAPTURE(v);
      CHECK(std::abs(table(v) - cdf(spec, v)) < 1e-10);
    }
    CHECK(table(0.0) == 0.0);
    CHECK(table(1e6) == doctest::Approx(1.0));
  }
}

TEST_CASE("tabulated curve carries its normalization") {
  const LawSpec spec{Law::kZ, derive(kBase), 1.0};
  const DensityCurve c = tabulate(spec, Grid1D::parse("log:0.01:5:50"));
  CHECK(c.values.size() == 50);
  REQUIRE(c.normalization.has_value());
  CHECK(std::abs(*c.normalization - 1.0) < c.normalization_tol);
  CHECK(c.values[10] == spec.density(c.grid[10]));
}
