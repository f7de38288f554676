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

#include "bernstein/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>

#include "CLI11.hpp"

#include "bernstein/densities.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/io.hpp"
#include "bernstein/mc.hpp"
#include "bernstein/pde.hpp"
#include "bernstein/verify.hpp"

namespace bernstein {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string params_path;
  std::string out_dir = ".";
};

struct DensityOpts {
  std::string law = "z";
  double t = 1.0;
  std::string grid = "log:0.01:5:200";
};

struct ResidualOpts {
  std::string eq = "c2";
  std::string ic_case;  // empty: follow the params file
  std::string perturb;
  bool flip_drift = false;
  double nu = 0.5;
  double h0 = StencilPolicy{}.h0;
  int levels = StencilPolicy{}.levels;
  std::string grid = "standard";
};

struct SimulateOpts {
  std::string law = "z";
  double t = 1.0;
  std::size_t n = 100000;
  std::optional<std::uint64_t> seed;
  std::string scheme = "exact";
  int steps = 2000;
  bool ks = false;
  bool compare_exact = false;
};

struct VerifyOpts {
  bool json = false;
  std::optional<std::uint64_t> seed;
};

// Raised for numeric failures that are not library exceptions.
struct Certification {
  int code;
};

ModelParams load_params(const RunConfig& c) {
  ModelParams p = c.params_path.empty() ? default_params() : read_params_file(c.params_path);
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid params: ") + e.what());
  }
  return p;
}

fs::path prepare_out(const RunConfig& c) {
  fs::path dir(c.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ConfigError("cannot create output directory " + dir.string());
  }
  return dir;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BERNSTEIN_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || env[0] == '-') {
      throw ConfigError(std::string("BERNSTEIN_SEED is not an unsigned integer: ") + env);
    }
    return v;
  }
  return 42;
}

int cmd_density(const RunConfig& c, const DensityOpts& o, std::ostream& out) {
  const ModelParams p = load_params(c);
  const DerivedParams d = derive(p);
  const Grid1D grid = Grid1D::parse(o.grid);
  const fs::path dir = prepare_out(c);
  if (!(o.t > 0.0) && o.law != "potential") throw ConfigError("--t must be > 0");

  DensityCurve curve{grid, {}, o.t, o.law, std::nullopt};
  if (o.law == "besq" || o.law == "x" || o.law == "z") {
    const Law law = o.law == "besq" ? Law::kBesq : o.law == "x" ? Law::kX : Law::kZ;
    curve = tabulate(LawSpec{law, d, o.t}, grid);
  } else {
    const InitialCondition ic = InitialCondition::from(p);
    for (double q : grid.points()) {
      if (o.law == "eta") {
        curve.values.push_back(eta(d, o.t, q));
      } else if (o.law == "eta_star") {
        curve.values.push_back(eta_star(d, o.t, q, ic));
      } else {
        curve.values.push_back(potential_v(d, q));
      }
    }
  }
  const std::string abscissa = (o.law == "besq" || o.law == "x") ? "y" : "q";
  const fs::path csv = dir / ("density_" + o.law + ".csv");
  write_curve_csv(csv, curve, abscissa);
  write_json(dir / ("density_" + o.law + ".json"), curve_sidecar(curve, p));
  out << "wrote " << csv.string() << " (" << grid.size() << " rows)";
  if (curve.normalization) out << ", normalization " << format_double(*curve.normalization);
  out << "\n";
  return kExitOk;
}

double parse_perturbation(const std::string& spec) {
  if (spec.empty()) return 0.0;
  if (spec.rfind("const:", 0) != 0) throw ConfigError("--perturb expects const:<value>, got " + spec);
  const std::string num = spec.substr(6);
  char* end = nullptr;
  const double v = std::strtod(num.c_str(), &end);
  if (num.empty() || *end != '\0' || !std::isfinite(v)) {
    throw ConfigError("--perturb: bad constant '" + num + "'");
  }
  return v;
}

int cmd_residual(const RunConfig& c, const ResidualOpts& o, std::ostream& out) {
  StencilPolicy policy;
  policy.h0 = o.h0;
  policy.levels = o.levels;
  try {
    policy.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const double shift = parse_perturbation(o.perturb);
  const fs::path dir = prepare_out(c);

  if (o.eq == "bessel") {
    std::vector<double> z;
    for (int j = 1; j <= 20; ++j) z.push_back(j);
    const BesselOdeReport rep = residual_bessel_ode(o.nu, z, policy);
    nlohmann::json j = to_json(rep.stencil);
    j["nu"] = o.nu;
    j["series_residual"] = rep.series_residual;
    const bool ok = rep.series_residual <= 1e-9 && rep.stencil.fitted_order >= 1.8;
    j["certified"] = ok;
    write_json(dir / "residual_bessel.json", j);
    out << "bessel nu=" << o.nu << " series residual " << rep.series_residual << " order "
        << rep.stencil.fitted_order << (ok ? " certified" : " NOT certified") << "\n";
    return ok ? kExitOk : kExitCertification;
  }

  ModelParams p = load_params(c);
  if (o.ic_case == "zero") {
    p.x0 = 0.0;
  } else if (o.ic_case == "positive") {
    if (!(p.x0 > 0.0)) throw ConfigError("--case positive needs x0 > 0 in the params file");
  } else if (!o.ic_case.empty()) {
    throw ConfigError("--case must be zero or positive");
  }
  const DerivedParams d = derive(p);
  const InitialCondition ic = InitialCondition::from(p);
  const std::vector<ResidualPoint> grid = o.grid == "near-origin" ? near_origin_grid() : standard_grid();

  ResidualReport rep;
  if (o.eq == "c1") {
    rep = residual_c1(d, [&](double t, double q) { return eta(d, t, q) + shift; }, grid, policy);
  } else if (o.eq == "c2") {
    rep = residual_c2(d, [&](double t, double q) { return eta_star(d, t, q, ic) + shift; }, grid,
                      policy);
  } else {
    const double sign = o.flip_drift ? -1.0 : 1.0;
    rep = residual_fokker_planck(
        d, [&](double t, double q) { return rho(d, t, q) + shift; },
        [&](double t, double q) { return sign * drift_forward(d, t, q); }, grid, policy);
  }
  const bool ok = rep.certified();
  nlohmann::json j = to_json(rep, p);
  j["certified"] = ok;
  write_json(dir / ("residual_" + o.eq + ".json"), j);
  out << to_string(rep.equation) << ": order " << rep.fitted_order << ", finest residual "
      << rep.finest() << ", extrapolated " << rep.finest_extrapolated()
      << (ok ? " certified" : " NOT certified") << "\n";
  return ok ? kExitOk : kExitCertification;
}

int cmd_simulate(const RunConfig& c, const SimulateOpts& o, std::ostream& out) {
  const ModelParams p = load_params(c);
  const DerivedParams d = derive(p);
  const std::uint64_t seed = resolve_seed(o.seed);
  if (!(o.t > 0.0)) throw ConfigError("--t must be > 0");
  if (o.n == 0) throw ConfigError("--n must be positive");
  Scheme scheme = Scheme::exact();
  if (o.scheme == "euler") {
    if (o.steps < 1) throw ConfigError("--steps must be >= 1");
    scheme = Scheme::euler(o.steps);
  }
  if (o.law == "besq" && o.scheme == "euler") {
    throw ConfigError("--scheme euler applies to x and z only");
  }
  const fs::path dir = prepare_out(c);

  auto draw = [&](const Scheme& s) {
    if (o.law == "besq") {
      SampleSet set = sample_besq(d.delta, o.t, d.x0(), o.n, seed);
      return set;
    }
    return o.law == "x" ? sample_x(d, o.t, o.n, seed, s) : sample_z(d, o.t, o.n, seed, s);
  };
  const SampleSet samples = draw(scheme);
  write_samples_csv(dir / ("samples_" + o.law + ".csv"), samples);
  write_json(dir / ("samples_" + o.law + ".json"), samples_sidecar(samples));
  out << "wrote " << samples.n() << " samples of " << o.law << " (" << scheme.describe()
      << ", seed " << seed << ")\n";

  bool rejected = false;
  nlohmann::json ks = nlohmann::json::object();
  if (o.ks) {
    const Law law = o.law == "besq" ? Law::kBesq : o.law == "x" ? Law::kX : Law::kZ;
    const TabulatedCdf table(LawSpec{law, d, o.t});
    const KsResult r = ks_test(samples, std::cref(table));
    ks["closed_form"] = to_json(r);
    rejected = rejected || r.rejects();
    out << "KS vs closed form: D=" << r.statistic << " critical " << r.critical
        << (r.rejects() ? " REJECT" : " pass") << "\n";
  }
  if (o.compare_exact) {
    if (scheme.kind == Scheme::exact().kind) {
      throw ConfigError("--compare-exact needs --scheme euler");
    }
    const SampleSet exact = draw(Scheme::exact());
    const KsResult r = ks_two_sample(samples.values, exact.values);
    ks["vs_exact"] = to_json(r);
    rejected = rejected || r.rejects();
    out << "two-sample KS vs exact: D=" << r.statistic << " critical " << r.critical
        << (r.rejects() ? " REJECT" : " pass") << "\n";
  }
  if (!ks.empty()) write_json(dir / "ks.json", ks);
  return rejected ? kExitStatistical : kExitOk;
}

int cmd_verify(const RunConfig& c, const VerifyOpts& o, std::ostream& out) {
  VerifyOptions opts;
  opts.params = load_params(c);
  opts.seed = resolve_seed(o.seed);
  const fs::path dir = prepare_out(c);
  opts.scratch_dir = dir;
  const auto results = run_acceptance(opts);
  const nlohmann::json summary = to_json(results);
  write_json(dir / "verify.json", summary);
  if (o.json) {
    out << summary.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
    }
  }
  bool hard = false, soft = false;
  for (const auto& r : results) {
    if (r.passed) continue;
    (r.statistical ? soft : hard) = true;
  }
  return hard ? kExitCertification : soft ? kExitStatistical : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein process numerics: densities, PDE residuals, simulation, verification",
               "bernstein"};
  app.require_subcommand(1);

  RunConfig common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", common.params_path, "key=value model file (default built in)")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", common.out_dir, "output directory (created if missing)");
  };

  DensityOpts dens;
  auto* density = app.add_subcommand("density", "tabulate a density or solution on a grid");
  add_common(density);
  density->add_option("--law", dens.law)
      ->check(CLI::IsMember({"besq", "x", "z", "eta", "eta_star", "potential"}));
  density->add_option("--t", dens.t);
  density->add_option("--grid", dens.grid, "lin:a:b:n or log:a:b:n");

  ResidualOpts res;
  auto* residual = app.add_subcommand("residual", "finite-difference PDE residual certification");
  add_common(residual);
  residual->add_option("--eq", res.eq)->check(CLI::IsMember({"c1", "c2", "fp", "bessel"}));
  residual->add_option("--case", res.ic_case)->check(CLI::IsMember({"zero", "positive"}));
  residual->add_option("--perturb", res.perturb, "const:<c> adds c to the candidate");
  residual->add_flag("--flip-drift", res.flip_drift, "negate the drift (fp only)");
  residual->add_option("--nu", res.nu, "order for --eq bessel");
  residual->add_option("--h0", res.h0);
  residual->add_option("--levels", res.levels);
  residual->add_option("--grid", res.grid)->check(CLI::IsMember({"standard", "near-origin"}));

  SimulateOpts sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo samples of BESQ, X or Z");
  add_common(simulate);
  simulate->add_option("--law", sim.law)->check(CLI::IsMember({"besq", "x", "z"}));
  simulate->add_option("--t", sim.t);
  simulate->add_option("--n", sim.n);
  simulate->add_option("--seed", sim.seed, "default: $BERNSTEIN_SEED, then 42");
  simulate->add_option("--scheme", sim.scheme)->check(CLI::IsMember({"exact", "euler"}));
  simulate->add_option("--steps", sim.steps);
  simulate->add_flag("--ks", sim.ks, "KS test against the closed-form CDF");
  simulate->add_flag("--compare-exact", sim.compare_exact, "two-sample KS against exact draws");

  VerifyOpts ver;
  auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
  add_common(verify);
  verify->add_flag("--json", ver.json, "print the JSON summary");
  verify->add_option("--seed", ver.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (density->parsed()) return cmd_density(common, dens, out);
    if (residual->parsed()) return cmd_residual(common, res, out);
    if (simulate->parsed()) return cmd_simulate(common, sim, out);
    return cmd_verify(common, ver, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ModelMismatch& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SchemeError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace bernstein
