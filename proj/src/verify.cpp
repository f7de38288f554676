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

#include "bernstein/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include "bernstein/cli.hpp"
#include "bernstein/densities.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/io.hpp"
#include "bernstein/mc.hpp"
#include "bernstein/pde.hpp"
#include "bernstein/specfun.hpp"

namespace bernstein {

namespace {

constexpr double kBesselOdeTol = 1e-9;
constexpr double kMinOrder = 1.8;
constexpr double kResidualTol = 1e-6;
constexpr double kFactorizationTol = 1e-12;
constexpr double kNormalizationTol = 1e-8;
constexpr double kMeanQuadratureTol = 1e-6;
constexpr double kMeanSigmas = 4.0;
constexpr double kLimitTol = 1e-5;
constexpr double kFalsificationRatio = 1e3;
constexpr std::size_t kMcSamples = 100000;
constexpr int kEulerSteps = 2000;
constexpr int kKsReplications = 100;
constexpr int kKsMinPasses = 95;
constexpr double kLimitX0 = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

ModelParams with_x0(ModelParams p, double x0) {
  p.x0 = x0;
  return p;
}

// Positive-start variant of the model: its own x0 if positive, else 1.
ModelParams positive_variant(const ModelParams& p) {
  return p.x0 > 0.0 ? p : with_x0(p, 1.0);
}

// Same alpha, beta, lambda, with phi adjusted so that delta = target.
ModelParams with_delta(ModelParams p, double target) {
  p.phi = target * p.alpha / 4.0 - p.lambda * p.beta / p.alpha;
  return p;
}

double mean_identity(const DerivedParams& d, double t) {
  const double decay = std::exp(-d.lambda() * t);
  const double a2 = d.alpha() * d.alpha();
  return decay * d.x0() - d.delta * a2 * std::expm1(-d.lambda() * t) / (4.0 * d.lambda());
}

struct Timed {
  CheckResult result;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

template <typename Body>
CheckResult run_check(int id, std::string name, bool statistical, Body&& body) {
  Timed timed;
  timed.result.id = id;
  timed.result.name = std::move(name);
  timed.result.statistical = statistical;
  try {
    body(timed.result, timed);
  } catch (const Error& e) {
    timed.result.passed = false;
    timed.result.detail = std::string("error: ") + e.what();
  }
  timed.result.seconds = timed.elapsed();
  return timed.result;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CheckResult check_bessel_ode() {
  return run_check(1, "bessel_ode_certification", false, [](CheckResult& r, Timed& timer) {
    std::vector<double> z;
    for (int j = 1; j <= 20; ++j) z.push_back(static_cast<double>(j));
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double nu = -0.9 + 5.9 * i / 5.0;
      worst = std::max(worst, residual_bessel_ode(nu, z).series_residual);
    }
    const double secs = timer.elapsed();
    r.passed = worst <= kBesselOdeTol && secs < 1.0;
    r.detail = "max scaled series residual " + fmt(worst) + " (tol 1e-9), " +
               fmt(secs) + " s (limit 1 s)";
  });
}

std::string describe(const ResidualReport& rep) {
  return to_string(rep.equation) + " order " + fmt(rep.fitted_order) + " finest " +
         fmt(rep.finest()) + " extrapolated " + fmt(rep.finest_extrapolated());
}

bool heat_ok(const ResidualReport& rep) {
  return rep.fitted_order >= kMinOrder && rep.finest_extrapolated() <= kResidualTol &&
         rep.finest() <= kResidualTol;
}

CheckResult check_dual_zero(const ModelParams& params) {
  return run_check(2, "dual_equation_zero_start", false, [&](CheckResult& r, Timed& timer) {
    const DerivedParams d = derive(with_x0(params, 0.0));
    const auto grid = standard_grid();
    const auto c2 = residual_c2(d, InitialCondition::zero_start(), grid);
    const auto c1 = residual_c1(d, [&](double t, double q) { return eta(d, t, q); }, grid);
    const double secs = timer.elapsed();
    r.passed = heat_ok(c2) && heat_ok(c1) && secs < 5.0;
    r.detail = describe(c2) + "; " + describe(c1) + "; " + fmt(secs) + " s (limit 5 s)";
  });
}

CheckResult check_dual_positive(const ModelParams& params) {
  return run_check(3, "dual_equation_positive_start", false, [&](CheckResult& r, Timed& timer) {
    const ModelParams p = positive_variant(params);
    const DerivedParams d = derive(p);
    const auto c2 = residual_c2(d, InitialCondition::positive_start(p.x0), standard_grid());
    const double secs = timer.elapsed();
    r.passed = heat_ok(c2) && secs < 10.0;
    r.detail = "x0=" + fmt(p.x0) + " " + describe(c2) + "; " + fmt(secs) + " s (limit 10 s)";
  });
}

CheckResult check_factorization(const ModelParams& params) {
  return run_check(4, "factorization_eta_eta_star", false, [&](CheckResult& r, Timed&) {
    double worst = 0.0;
    for (const ModelParams& p : {with_x0(params, 0.0), positive_variant(params)}) {
      const DerivedParams d = derive(p);
      const InitialCondition ic = InitialCondition::from(p);
      for (int i = 0; i < 50; ++i) {
        const double t = 0.1 + 3.9 * i / 49.0;
        for (int j = 0; j < 50; ++j) {
          const double q = 0.05 + 2.95 * j / 49.0;
          const double lhs = eta(d, t, q) * eta_star(d, t, q, ic);
          const double rhs = rho(d, t, q);
          worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
      }
    }
    r.passed = worst <= kFactorizationTol;
    r.detail = "max relative |eta*eta_star - rho| / rho = " + fmt(worst) + " (tol 1e-12)";
  });
}

CheckResult check_normalization(const ModelParams& params) {
  return run_check(5, "normalization", false, [&](CheckResult& r, Timed&) {
    double worst = 0.0;
    std::vector<ModelParams> models = {with_x0(params, 0.0), positive_variant(params)};
    for (double x0 : {0.0, 1.0}) models.push_back(with_x0(with_delta(params, 0.5), x0));
    for (const ModelParams& p : models) {
      const DerivedParams d = derive(p);
      for (double t : {0.25, 1.0, 4.0}) {
        worst = std::max(worst, std::abs(normalization({Law::kZ, d, t}) - 1.0));
      }
    }
    r.passed = worst <= kNormalizationTol;
    r.detail = "max |mass - 1| = " + fmt(worst) + " over 4 models x 3 times, incl. delta=0.5 (tol 1e-8)";
  });
}

CheckResult check_mean(const ModelParams& params, std::uint64_t seed) {
  return run_check(6, "mean_identity", true, [&](CheckResult& r, Timed&) {
    double worst_quad = 0.0;
    double worst_sigma = 0.0;
    for (const ModelParams& p : {with_x0(params, 0.0), positive_variant(params)}) {
      const DerivedParams d = derive(p);
      for (double t : {0.25, 1.0, 4.0}) {
        const double expected = mean_identity(d, t);
        const double quad = raw_moment({Law::kZ, d, t}, 2);
        worst_quad = std::max(worst_quad, std::abs(quad - expected) / expected);
      }
      const double t = 1.0;
      const SampleSet s = sample_z(d, t, kMcSamples, seed);
      const MomentSummary m = summarize(s.values, [](double z) { return z * z; });
      worst_sigma = std::max(worst_sigma, std::abs(m.mean - mean_identity(d, t)) / m.standard_error());
    }
    r.passed = worst_quad <= kMeanQuadratureTol && worst_sigma <= kMeanSigmas;
    r.detail = "quadrature max relative error " + fmt(worst_quad) + " (tol 1e-6); Monte Carlo max " +
               fmt(worst_sigma) + " standard errors (limit 4), n=1e5";
  });
}

CheckResult check_time_change(const ModelParams& params, std::uint64_t seed) {
  return run_check(7, "time_change_law", true, [&](CheckResult& r, Timed& timer) {
    const DerivedParams d = derive(params);
    const double t = 1.0;
    const SampleSet exact = sample_z(d, t, kMcSamples, seed);
    const SampleSet euler = sample_z(d, t, kMcSamples, seed, Scheme::euler(kEulerSteps));
    const KsResult two = ks_two_sample(exact.values, euler.values);

    const TabulatedCdf cdf(LawSpec{Law::kZ, d, t});
    int passes = 0;
    for (int k = 0; k < kKsReplications; ++k) {
      const SampleSet s = sample_z(d, t, kMcSamples, seed + 1 + static_cast<std::uint64_t>(k));
      if (!ks_test(s, std::cref(cdf)).rejects()) ++passes;
    }
    const double secs = timer.elapsed();
    r.passed = !two.rejects() && passes >= kKsMinPasses && secs < 60.0;
    r.detail = "two-sample KS exact vs Euler(2000) D=" + fmt(two.statistic) + " crit " +
               fmt(two.critical) + "; one-sample KS passes " + std::to_string(passes) +
               "/100 (need 95); " + fmt(secs) + " s (limit 60 s)";
  });
}

CheckResult check_limit(const ModelParams& params) {
  return run_check(8, "zero_start_limit", false, [&](CheckResult& r, Timed&) {
    const DerivedParams near = derive(with_x0(params, kLimitX0));
    const DerivedParams zero = derive(with_x0(params, 0.0));
    double worst = 0.0;
    for (double t : {0.25, 1.0, 4.0}) {
      for (int j = 0; j < 30; ++j) {
        const double q = 0.1 + 2.9 * j / 29.0;
        const double a = rho_positive(near, t, q);
        const double b = rho_zero(zero, t, q);
        worst = std::max(worst, std::abs(a - b) / b);
      }
    }
    r.passed = worst <= kLimitTol;
    r.detail = "max relative gap rho_positive(x0=1e-12) vs rho_zero on q in [0.1, 3]: " + fmt(worst) +
               " (tol 1e-5)";
  });
}

CheckResult check_falsification(const ModelParams& params) {
  return run_check(9, "falsification_controls", false, [&](CheckResult& r, Timed&) {
    const auto grid = standard_grid();
    const DerivedParams d = derive(positive_variant(params));
    const InitialCondition ic = InitialCondition::from(d.params);
    auto eta_f = [&](double t, double q) { return eta(d, t, q); };
    auto star_f = [&](double t, double q) { return eta_star(d, t, q, ic); };

    const auto c1 = residual_c1(d, eta_f, grid);
    const auto c1_bad = residual_c1(d, [&](double t, double q) { return eta(d, t, q) + 1.0; }, grid);
    const auto c2 = residual_c2(d, star_f, grid);
    const auto c2_bad = residual_c2(d, eta_f, grid);
    const auto fp = residual_fokker_planck(d, grid);
    const auto fp_bad = residual_fokker_planck(
        d, [&](double t, double q) { return rho(d, t, q); },
        [&](double t, double q) { return -drift_forward(d, t, q); }, grid);

    const double ratios[] = {c1_bad.finest() / c1.finest(), c2_bad.finest() / c2.finest(),
                             fp_bad.finest() / fp.finest()};
    r.passed = std::all_of(std::begin(ratios), std::end(ratios),
                           [](double x) { return x >= kFalsificationRatio; });
    r.detail = "control/solution residual ratios: C1 eta+1 " + fmt(ratios[0]) + ", C2 with eta " +
               fmt(ratios[1]) + ", FP flipped drift " + fmt(ratios[2]) + " (need >= 1e3)";
  });
}

CheckResult check_determinism(const ModelParams& params, std::uint64_t seed,
                              const std::filesystem::path& scratch) {
  return run_check(10, "simulate_determinism", false, [&](CheckResult& r, Timed&) {
    const auto base = scratch / ("bernstein_determinism_" + std::to_string(seed));
    std::filesystem::create_directories(base);
    const auto params_file = base / "model.params";
    write_text(params_file, format_params(params));
    std::string bytes[2];
    int codes[2];
    for (int k = 0; k < 2; ++k) {
      const auto dir = base / ("run" + std::to_string(k));
      std::ostringstream out, err;
      codes[k] = run_cli({"simulate", "--params", params_file.string(), "--law", "z", "--t", "1",
                          "--n", "20000", "--seed", std::to_string(seed), "--out", dir.string()},
                         out, err);
      bytes[k] = read_file(dir / "samples_z.csv") + read_file(dir / "samples_z.json");
    }
    std::filesystem::remove_all(base);
    r.passed = codes[0] == kExitOk && codes[1] == kExitOk && !bytes[0].empty() &&
               bytes[0] == bytes[1];
    r.detail = "two simulate runs with seed " + std::to_string(seed) +
               (bytes[0] == bytes[1] ? " produced identical bytes" : " differ") + " (" +
               std::to_string(bytes[0].size()) + " bytes)";
  });
}

}  // namespace

ModelParams default_params() {
  // phi_tilde = 0.65, delta = 2.6, nu = 0.3, A < 0
  return {1.0, 0.5, 0.25, 0.8, 1.0};
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
  const ModelParams& p = options.params;
  p.validate();
  return {check_bessel_ode(),
          check_dual_zero(p),
          check_dual_positive(p),
          check_factorization(p),
          check_normalization(p),
          check_mean(p, options.seed),
          check_time_change(p, options.seed),
          check_limit(p),
          check_falsification(p),
          check_determinism(p, options.seed, options.scratch_dir)};
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed;
    checks.push_back({{"id", c.id},
                      {"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"statistical", c.statistical},
                      {"seconds", c.seconds},
                      {"detail", c.detail}});
  }
  return {{"all_passed", all}, {"checks", checks}};
}

}  // namespace bernstein
