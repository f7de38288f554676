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

#include <filesystem>
#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "bernstein/errors.hpp"
#include "bernstein/grid.hpp"
#include "bernstein/io.hpp"
#include "bernstein/quadrature.hpp"

using namespace bernstein;

TEST_CASE("params round trip") {
  const ModelParams p{1.0, 0.5, 0.25, 0.8, 0.1};
  CHECK(parse_params(format_params(p)) == p);
  const ModelParams q = parse_params("# comment\n alpha = -1.5\nbeta=0\nphi=1 # trailing\n"
                                     "lambda=-0.3\n\nx0=2e-3\n");
  CHECK(q.alpha == -1.5);
  CHECK(q.lambda == -0.3);
  CHECK(q.x0 == 2e-3);
}

TEST_CASE("params errors") {
  const std::string ok = "alpha=1\nbeta=0.5\nphi=0.25\nlambda=0.8\n";
  CHECK_THROWS_AS(parse_params(ok), ConfigError);  // missing x0
  CHECK_THROWS_AS(parse_params(ok + "x0=1\nx0=2\n"), ConfigError);
  CHECK_THROWS_AS(parse_params(ok + "x0=1\ngamma=2\n"), ConfigError);
  CHECK_THROWS_AS(parse_params(ok + "x0=abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_params(ok + "x0 1\n"), ConfigError);
  CHECK_THROWS_AS(read_params_file("/nonexistent/file.params"), ConfigError);
}

TEST_CASE("doubles print with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("grid mini-language") {
  const Grid1D lin = Grid1D::parse("lin:1:2:5");
  CHECK(lin.size() == 5);
  CHECK(lin[4] == 2.0);
  CHECK(lin[1] == 1.25);
  const Grid1D lg = Grid1D::parse("log:0.01:5:200");
  CHECK(lg.size() == 200);
  CHECK(lg[0] == doctest::Approx(0.01));
  CHECK(lg[199] == doctest::Approx(5.0));
  CHECK(lg.describe() == "log:0.01:5:200");
  for (const char* bad : {"", "lin:0:1", "log:0:1:5", "cubic:0:1:4", "lin:1:0:5", "lin:0:1:1",
                          "lin:0:1:x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Grid1D::parse(bad), ConfigError);
  }
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate([](double x) { return std::exp(-x) * std::sin(5 * x); }, 0.0, 10.0);
  const double exact = (5.0 - std::exp(-10.0) * (std::sin(50.0) + 5 * std::cos(50.0))) / 26.0;
  CHECK(std::abs(r.value - exact) < 1e-13);
  // Integrable endpoint singularity: integral of x^{-0.75} over (0, 1) is 4.
  const auto s = integrate_power_singular([](double x) { return std::pow(x, -0.75); }, 1.0, -0.75);
  CHECK(s.value == doctest::Approx(4.0).epsilon(1e-12));
  QuadOptions tight;
  tight.max_subdivisions = 3;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(200 * x); }, 0.0, 10.0, tight),
                  QuadratureError);
}

TEST_CASE("json for reports") {
  const auto j = to_json(derive(ModelParams{1.0, 0.5, 0.25, 0.8, 1.0}));
  CHECK(j.at("delta").get<double>() == doctest::Approx(2.6));
  KsResult ks{0.01, 1000, 0.05};
  const auto k = to_json(ks);
  CHECK(k.at("rejects") == false);
  CHECK(k.at("n") == 1000);
}
