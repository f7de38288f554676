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

#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "bernstein/errors.hpp"
#include "bernstein/mc.hpp"
#include "bernstein/rng.hpp"

using namespace bernstein;

namespace {

const ModelParams kBase{1.0, 0.5, 0.25, 0.8, 1.0};

}  // namespace

TEST_CASE("Philox4x32-10 known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::encrypt({0, 0, 0, 0}, {0, 0}) ==
        B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::encrypt({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                            {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::encrypt({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                            {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("uniforms stay inside the open interval and streams differ") {
  Philox4x32 a(7, 0), b(7, 1), c(7, 0);
  bool differ = false;
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    differ = differ || b.uniform() != c.uniform();
  }
  CHECK(differ);
}

TEST_CASE("variate moments") {
  Philox4x32 eng(123, 9);
  Variates v(eng);
  constexpr int n = 200000;
  auto moments = [&](auto draw, double mean, double var) {
    std::vector<double> xs(n);
    for (auto& x : xs) x = draw();
    const MomentSummary m = summarize(xs, [](double x) { return x; });
    CHECK(std::abs(m.mean - mean) < 5 * std::sqrt(var / n));
    CHECK(m.stddev * m.stddev == doctest::Approx(var).epsilon(0.03));
  };
  moments([&] { return v.normal(); }, 0.0, 1.0);
  for (double k : {0.3, 1.0, 4.7}) moments([&] { return v.gamma(k); }, k, k);
  for (double m : {0.5, 3.0, 25.0, 400.0}) {
    moments([&] { return static_cast<double>(v.poisson(m)); }, m, m);
  }
  CHECK(v.poisson(0.0) == 0);
}

TEST_CASE("sampling is deterministic and prefix-stable") {
  const DerivedParams d = derive(kBase);
  const auto a = sample_z(d, 1.0, 20000, 5);
  const auto b = sample_z(d, 1.0, 20000, 5);
  CHECK(a.values == b.values);
  const auto prefix = sample_z(d, 1.0, 100, 5);
  CHECK(std::equal(prefix.values.begin(), prefix.values.end(), a.values.begin()));
  CHECK(sample_z(d, 1.0, 100, 6).values != prefix.values);
  CHECK(std::all_of(a.values.begin(), a.values.end(), [](double z) { return z >= 0; }));
}

TEST_CASE("exact X is the time-changed BESQ draw") {
  const DerivedParams d = derive(kBase);
  const auto x = sample_x(d, 1.3, 1000, 11);
  const auto y = sample_besq(d.delta, besq_clock(d, 1.3), d.x0(), 1000, 11);
  for (std::size_t i = 0; i < x.n(); ++i) {
    CHECK(x.values[i] == doctest::Approx(std::exp(-0.8 * 1.3) * y.values[i]).epsilon(1e-15));
  }
}

TEST_CASE("scheme validation") {
  CHECK_THROWS_AS(Scheme::euler(0), SchemeError);
  CHECK(Scheme::euler(20).describe() == "euler(20)");
  CHECK(Scheme::exact().describe() == "exact");
}

TEST_CASE("KS test is calibrated at the 1% level") {
  int rejections = 0;
  constexpr int kRuns = 300;
  for (int s = 0; s < kRuns; ++s) {
    Philox4x32 eng(1000 + s, 0);
    std::vector<double> u(2000);
    for (auto& x : u) x = eng.uniform();
    if (ks_test(u, [](double x) { return x; }).rejects()) ++rejections;
  }
  // Binomial(300, 0.01): 12 is beyond the 0.999 quantile.
  CHECK(rejections < 12);
}

TEST_CASE("KS test has power and guards its domain") {
  Philox4x32 eng(3, 0);
  std::vector<double> u(5000);
  for (auto& x : u) x = eng.uniform();
  CHECK(ks_test(u, [](double x) { return x * x; }).rejects());
  CHECK_THROWS_AS(ks_test(std::span<const double>(u.data(), 10), [](double x) { return x; }),
                  DomainError);
  std::vector<double> shifted(u);
  for (auto& x : shifted) x += 0.05;
  CHECK(ks_two_sample(u, shifted).rejects());
  CHECK(ks_two_sample(u, u).statistic == 0.0);
}

TEST_CASE("exact samples match the closed-form law") {
  for (double x0 : {0.0, 1.0}) {
    ModelParams p = kBase;
    p.x0 = x0;
    const DerivedParams d = derive(p);
    const auto s = sample_z(d, 0.6, 50000, 17);
    const TabulatedCdf table({Law::kZ, d, 0.6});
    CHECK_FALSE(ks_test(s, std::cref(table)).rejects());
    const auto m = summarize(s.values, [](double z) { return z * z; });
    CHECK(std::abs(m.mean - LawSpec{Law::kZ, d, 0.6}.moment()) < 4 * m.standard_error());
  }
}

TEST_CASE("Euler converges to the exact law") {
  const DerivedParams d = derive(kBase);
  const auto exact = sample_x(d, 1.0, 40000, 3);
  const auto euler = sample_x(d, 1.0, 40000, 3, Scheme::euler(500));
  CHECK_FALSE(ks_two_sample(exact.values, euler.values).rejects());
  const auto coarse = sample_x(d, 1.0, 40000, 3, Scheme::euler(1));
  CHECK(ks_two_sample(exact.values, coarse.values).rejects());
}
