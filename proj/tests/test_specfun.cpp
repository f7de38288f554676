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
#include <vector>

#include "doctest.h"

#include "bernstein/errors.hpp"
#include "bernstein/specfun.hpp"

using namespace bernstein;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Independent J0 series for the root search below.
double j0_series(double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -(z * z / 4.0) / (k * k);
    sum += term;
  }
  return sum;
}

struct Frozen {
  double nu, z, value, d1;
};

// 40-digit reference values.
const Frozen kIFrozen[] = {
    {-0.9, 0.5, 0.60135800596922513633, -0.114605085639407478},
    {0.3, 1.0, 1.0887949490168028712, 0.71403083568883729966},
    {0.0, 2.5, 3.2898391440501230357, 2.5167162452886984415},
    {1.5, 7.0, 141.73467461112153602, 134.98508356044618452},
    {5.0, 20.0, 23018392.213413670701, 23180462.2654114529},
    {2.6, 45.0, 1931049740549474232.8, 1912766270523845370.9},
    {0.3, 150.0, 4.5422300165399432846e+63, 4.5270729908785270567e+63},
};

const Frozen kJFrozen[] = {
    {0.0, 1.0, 0.76519768655796655145, 0},  {0.5, 3.0, 0.065008182877375778114, 0},
    {2.0, 10.0, 0.25463031368512062253, 0}, {1.3, 25.0, -0.15615428557690453084, 0},
    {0.0, 40.0, 0.0073668905842372895535, 0}, {3.5, 60.0, -0.094558348480472002323, 0},
};

}  // namespace

TEST_CASE("gamma at integers and half integers") {
  CHECK(bernstein::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bernstein::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(rel(bernstein::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-15);
  CHECK(rel(log_gamma(100.0), 359.13420536957539878) < 1e-15);
  CHECK_THROWS_AS(bernstein::gamma(200.0), OverflowError);
}

TEST_CASE("trivial Bessel values") {
  CHECK(bessel_i(0.0, 0.0) == 1.0);
  CHECK(bessel_i(1.3, 0.0) == 0.0);
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK_THROWS_AS(bessel_i(-0.5, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_i_d1(0.5, 0.0), DomainError);
}

TEST_CASE("half-integer closed forms") {
  for (double z : {0.1, 1.0, 5.0, 29.0, 31.0, 80.0}) {
    const double c = std::sqrt(2.0 / (std::numbers::pi * z));
    CHECK(rel(bessel_i(0.5, z), c * std::sinh(z)) < 1e-14);
    CHECK(rel(bessel_i(-0.5, z), c * std::cosh(z)) < 1e-14);
    const double d1 = c * (std::cosh(z) - std::sinh(z) / (2.0 * z));
    CHECK(rel(bessel_i_d1(0.5, z), d1) < 1e-13);
    CHECK(rel(bessel_j(0.5, z), c * std::sin(z)) < 1e-12 * std::max(1.0, 1.0 / std::abs(std::sin(z))));
  }
}

TEST_CASE("frozen high-precision table") {
  for (const auto& f : kIFrozen) {
    CAPTURE(f.nu);
    CAPTURE(f.z);
    CHECK(rel(bessel_i(f.nu, f.z), f.value) < 1e-13);
    CHECK(rel(bessel_i_d1(f.nu, f.z), f.d1) < 1e-13);
    CHECK(std::abs(log_bessel_i(f.nu, f.z) - std::log(f.value)) < 1e-13 * std::max(1.0, f.z));
  }
  for (const auto& f : kJFrozen) {
    CAPTURE(f.nu);
    CAPTURE(f.z);
    CHECK(std::abs(bessel_j(f.nu, f.z) - f.value) < 1e-14);
  }
}

TEST_CASE("first zero of J0") {
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (j0_series(mid) > 0 ? lo : hi) = mid;
  }
  CHECK(std::abs(lo - 2.4048255576957727686) < 1e-14);
  CHECK(std::abs(bessel_j(0.0, lo)) < 1e-15);
}

TEST_CASE("integer order: I_n(z) = i^{-n} J_n(iz)") {
  // J_n(iz) = i^n I_n(z); series of J with z^2 -> -z^2 reproduces I.
  for (int n : {0, 1, 3}) {
    for (double z : {0.5, 4.0, 12.0}) {
      double term = std::pow(z / 2.0, n) / std::tgamma(n + 1.0), sum = term;
      for (int k = 1; k < 200; ++k) {
        term *= (z * z / 4.0) / (k * (k + n));
        sum += term;
      }
      CHECK(rel(bessel_i(n, z), sum) < 1e-14);
    }
  }
}

TEST_CASE("agreement with the standard library away from the switch") {
  for (double nu : {0.0, 0.3, 1.7, 4.0}) {
    for (double z : {0.2, 3.0, 17.0, 29.9, 30.1, 55.0, 200.0}) {
      CAPTURE(nu);
      CAPTURE(z);
      CHECK(rel(bessel_i(nu, z), std::cyl_bessel_i(nu, z)) < 1e-13);
      if (z < 100) CHECK(std::abs(bessel_j(nu, z) - std::cyl_bessel_j(nu, z)) < 1e-13);
    }
  }
}

TEST_CASE("scaled I is positive, at most one for nu >= 0, and I is monotone in z") {
  for (double nu : {0.0, 0.3, 2.6}) {
    double prev_i = 0.0;
    for (double z = 0.05; z < 300; z *= 1.3) {
      const double s = bessel_i_scaled(nu, z);
      CHECK(s > 0.0);
      CHECK(s <= 1.0 + 1e-15);
      const double i = log_bessel_i(nu, z);
      if (prev_i != 0.0) CHECK(i > prev_i);
      prev_i = i;
    }
  }
}

TEST_CASE("derivative triples satisfy the ODE") {
  for (double nu : {-0.9, 0.3, 5.0}) {
    for (double z : {0.5, 10.0, 40.0, 120.0}) {
      const BesselTriple s = bessel_i_scaled_all(nu, z);
      const double res = z * z * s.d2 + z * s.d1 - (z * z + nu * nu) * s.value;
      CHECK(std::abs(res) < 1e-12 * std::max(1.0, z * z * s.value));
      const BesselTriple j = bessel_j_all(std::abs(nu), z);
      const double rj = z * z * j.d2 + z * j.d1 + (z * z - nu * nu) * j.value;
      CHECK(std::abs(rj) < 1e-11 * std::max(1.0, z * z));
    }
  }
}

TEST_CASE("policy validation") {
  SeriesPolicy p;
  p.max_terms = 0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  SeriesPolicy tight;
  tight.max_terms = 2;
  CHECK_THROWS_AS(bessel_i(0.3, 10.0, tight), ConvergenceError);
}
