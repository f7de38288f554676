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

#include "bernstein/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "bernstein/errors.hpp"

namespace bernstein {

namespace {

constexpr double kRescaleThreshold = 1e250;
constexpr double kRescaleFactor = 1e-250;
const double kLogRescale = 250.0 * std::numbers::ln10;

// exp(log_factor) * sum reproduces the scaled triple e^{-z}(I, I', I'').
struct ScaledSum {
  double log_factor = 0.0;
  BesselTriple sum;
};

[[noreturn]] void throw_convergence(const char* what, double order, double z,
                                    int terms) {
  throw ConvergenceError(std::string(what) + ": series for order " +
                         std::to_string(order) + " at z=" + std::to_string(z) +
                         " did not converge within " + std::to_string(terms) +
                         " terms");
}

void check_i_args(double nu, double z) {
  if (!(nu > -1.0) || !std::isfinite(nu)) {
    throw DomainError("bessel_i: order must satisfy nu > -1, got " +
                      std::to_string(nu));
  }
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("bessel_i: argument must be finite and >= 0, got " +
                      std::to_string(z));
  }
}

// Power series sum_n (z/2)^{nu+2n} / (n! Gamma(n+nu+1)), differentiated term
// by term, held relative to its leading term with a running rescale.
ScaledSum i_power_series(double nu, double z, const SeriesPolicy& policy) {
  const double half = 0.5 * z;
  const double quarter_sq = half * half;
  double log_offset = 0.0;

  double term = 1.0;
  double c1 = nu / z;
  double c2 = nu * (nu - 1.0) / (z * z);
  BesselTriple s{1.0, c1, c2};
  double abs1 = std::abs(c1);
  double abs2 = std::abs(c2);

  int n = 1;
  for (;; ++n) {
    if (n > policy.max_terms) {
      throw_convergence("bessel_i", nu, z, policy.max_terms);
    }
    const double dn = static_cast<double>(n);
    term *= quarter_sq / (dn * (dn + nu));
    const double k = nu + 2.0 * dn;
    c1 = k / z;
    c2 = k * (k - 1.0) / (z * z);
    const double t1 = term * c1;
    const double t2 = term * c2;
    s.value += term;
    s.d1 += t1;
    s.d2 += t2;
    abs1 += std::abs(t1);
    abs2 += std::abs(t2);
    if (term <= policy.rel_tol * s.value &&
        std::abs(t1) <= policy.rel_tol * abs1 &&
        std::abs(t2) <= policy.rel_tol * abs2) {
      break;
    }
    if (s.value > kRescaleThreshold) {
      term *= kRescaleFactor;
      s.value *= kRescaleFactor;
      s.d1 *= kRescaleFactor;
      s.d2 *= kRescaleFactor;
      abs1 *= kRescaleFactor;
      abs2 *= kRescaleFactor;
      log_offset += kLogRescale;
    }
  }
  const double log_t0 = nu * std::log(half) - log_gamma(nu + 1.0);
  return {log_t0 - z + log_offset, s};
}

// Hankel expansion e^{-z} I_nu(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(nu) z^{-k}
// with each term z^{-k-1/2} e^{z} differentiated exactly. Empty when the
// asymptotic series starts to diverge before reaching the tolerance.
std::optional<BesselTriple> i_hankel(double nu, double z,
                                     const SeriesPolicy& policy) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double prev_abs = std::numeric_limits<double>::infinity();
  BesselTriple s;
  for (int k = 0; k <= policy.max_terms; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      term *= -(mu - odd * odd) / (8.0 * k * z);
    }
    const double a = std::abs(term);
    if (a > prev_abs) return std::nullopt;
    const double p = (k + 0.5) / z;
    s.value += term;
    s.d1 += term * (1.0 - p);
    s.d2 += term * ((1.0 - p) * (1.0 - p) + p / z);
    if (a <= policy.rel_tol * std::abs(s.value)) {
      const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * z);
      return BesselTriple{s.value * norm, s.d1 * norm, s.d2 * norm};
    }
    prev_abs = a;
  }
  return std::nullopt;
}

ScaledSum i_scaled_sum(double nu, double z, const SeriesPolicy& policy) {
  policy.validate();
  check_i_args(nu, z);
  if (z == 0.0) {
    throw DomainError("bessel_i: scaled evaluation requires z > 0");
  }
  if (z > policy.large_z_switch) {
    if (auto h = i_hankel(nu, z, policy)) return {0.0, *h};
  }
  return i_power_series(nu, z, policy);
}

double i_at_zero(double nu) {
  if (nu == 0.0) return 1.0;
  if (nu > 0.0) return 0.0;
  throw DomainError("bessel_i: I_nu(0) diverges for nu < 0");
}

// ---- J_lambda --------------------------------------------------------------

void check_j_args(double lambda, double z) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("bessel_j: order must be >= 0, got " +
                      std::to_string(lambda));
  }
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("bessel_j: argument must be finite and >= 0, got " +
                      std::to_string(z));
  }
}

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
// 2^-112
constexpr Wide kWideEpsilon = Wide(1) / (Wide(1ull << 56) * Wide(1ull << 56));
#else
using Wide = long double;
constexpr Wide kWideEpsilon = std::numeric_limits<long double>::epsilon();
#endif

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

// Alternating power series accumulated in quad precision. Partial sums reach
// e^z / sqrt(2 pi z) before cancelling, so double would lose about z / ln 10
// digits; the cancellation floor is tracked through the sum of |terms|.
BesselTriple j_power_series(double lambda, double z,
                            const SeriesPolicy& policy) {
  const Wide zw = z;
  const Wide quarter_sq = zw * zw / 4;
  const Wide lam = lambda;
  const Wide tol = policy.rel_tol;

  Wide term = 1;
  Wide s0 = 1, s1 = lam / zw, s2 = lam * (lam - 1) / (zw * zw);
  Wide a0 = 1, a1 = wide_abs(s1), a2 = wide_abs(s2);
  auto done = [&](Wide t, Wide s, Wide a) {
    const Wide at = wide_abs(t);
    return at <= tol * wide_abs(s) || at <= kWideEpsilon * a;
  };
  for (int n = 1;; ++n) {
    if (n > policy.max_terms) {
      throw_convergence("bessel_j", lambda, z, policy.max_terms);
    }
    const Wide dn = n;
    term *= -quarter_sq / (dn * (dn + lam));
    const Wide k = lam + 2 * dn;
    const Wide t1 = term * k / zw;
    const Wide t2 = term * k * (k - 1) / (zw * zw);
    s0 += term;
    s1 += t1;
    s2 += t2;
    a0 += wide_abs(term);
    a1 += wide_abs(t1);
    a2 += wide_abs(t2);
    if (done(term, s0, a0) && done(t1, s1, a1) && done(t2, s2, a2)) break;
  }
  const double t0 = std::exp(lambda * std::log(0.5 * z) - log_gamma(lambda + 1.0));
  return {static_cast<double>(s0) * t0, static_cast<double>(s1) * t0,
          static_cast<double>(s2) * t0};
}

// Hankel P/Q expansion of J_nu(z) for large z.
std::optional<double> j_hankel(double nu, double z,
                               const SeriesPolicy& policy) {
  const double mu = 4.0 * nu * nu;
  double p = 0.0;
  double q = 0.0;
  double a = 1.0;  // a_k(nu) / z^k, unsigned recursion
  double prev_abs = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= policy.max_terms; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      a *= (mu - odd * odd) / (8.0 * k * z);
    }
    const double abs_a = std::abs(a);
    if (abs_a > prev_abs) return std::nullopt;
    // (-1)^{floor(k/2)} sign pattern shared by P (even k) and Q (odd k).
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * a;
    } else {
      q += sign * a;
    }
    if (abs_a <= policy.rel_tol * (std::abs(p) + std::abs(q))) {
      const double chi = z - (0.5 * nu + 0.25) * std::numbers::pi;
      return std::sqrt(2.0 / (std::numbers::pi * z)) *
             (p * std::cos(chi) - q * std::sin(chi));
    }
    prev_abs = abs_a;
  }
  return std::nullopt;
}

}  // namespace

void SeriesPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesPolicy: rel_tol must be > 0");
  if (max_terms < 1) throw DomainError("SeriesPolicy: max_terms must be >= 1");
  if (!(large_z_switch > 0.0)) {
    throw DomainError("SeriesPolicy: large_z_switch must be > 0");
  }
}

double gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma: argument must be > 0, got " + std::to_string(x));
  }
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) {
    throw OverflowError("gamma: result overflows at x=" + std::to_string(x));
  }
  return g;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be > 0, got " +
                      std::to_string(x));
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

BesselTriple bessel_j_all(double lambda, double z, const SeriesPolicy& policy) {
  policy.validate();
  check_j_args(lambda, z);
  if (z == 0.0) {
    throw DomainError("bessel_j: derivatives require z > 0");
  }
  if (z > policy.large_z_switch) {
    auto j = j_hankel(lambda, z, policy);
    // J' = (J_{l-1} - J_{l+1}) / 2; the Hankel form holds for any real order.
    auto jm = j_hankel(lambda - 1.0, z, policy);
    auto jp = j_hankel(lambda + 1.0, z, policy);
    if (j && jm && jp) {
      const double d1 = 0.5 * (*jm - *jp);
      const double d2 = -d1 / z - (1.0 - lambda * lambda / (z * z)) * *j;
      return {*j, d1, d2};
    }
  }
  return j_power_series(lambda, z, policy);
}

double bessel_j(double lambda, double z, const SeriesPolicy& policy) {
  policy.validate();
  check_j_args(lambda, z);
  if (z == 0.0) return lambda == 0.0 ? 1.0 : 0.0;
  if (z > policy.large_z_switch) {
    if (auto j = j_hankel(lambda, z, policy)) return *j;
  }
  return j_power_series(lambda, z, policy).value;
}

double bessel_j_d1(double lambda, double z, const SeriesPolicy& policy) {
  return bessel_j_all(lambda, z, policy).d1;
}

double bessel_j_d2(double lambda, double z, const SeriesPolicy& policy) {
  return bessel_j_all(lambda, z, policy).d2;
}

BesselTriple bessel_i_scaled_all(double nu, double z,
                                 const SeriesPolicy& policy) {
  const ScaledSum s = i_scaled_sum(nu, z, policy);
  const double f = std::exp(s.log_factor);
  return {s.sum.value * f, s.sum.d1 * f, s.sum.d2 * f};
}

double bessel_i_scaled(double nu, double z, const SeriesPolicy& policy) {
  policy.validate();
  check_i_args(nu, z);
  if (z == 0.0) return i_at_zero(nu);
  return bessel_i_scaled_all(nu, z, policy).value;
}

double log_bessel_i(double nu, double z, const SeriesPolicy& policy) {
  policy.validate();
  check_i_args(nu, z);
  if (z == 0.0) return std::log(i_at_zero(nu));
  const ScaledSum s = i_scaled_sum(nu, z, policy);
  return s.log_factor + z + std::log(s.sum.value);
}

double bessel_i(double nu, double z, const SeriesPolicy& policy) {
  policy.validate();
  check_i_args(nu, z);
  if (z == 0.0) return i_at_zero(nu);
  const ScaledSum s = i_scaled_sum(nu, z, policy);
  const double v = std::exp(s.log_factor + z) * s.sum.value;
  if (!std::isfinite(v)) {
    throw OverflowError("bessel_i: I_nu(z) overflows at z=" +
                        std::to_string(z) + "; use bessel_i_scaled");
  }
  return v;
}

double bessel_i_d1(double nu, double z, const SeriesPolicy& policy) {
  if (!(z > 0.0)) throw DomainError("bessel_i_d1: requires z > 0");
  const ScaledSum s = i_scaled_sum(nu, z, policy);
  return std::exp(s.log_factor + z) * s.sum.d1;
}

double bessel_i_d2(double nu, double z, const SeriesPolicy& policy) {
  if (!(z > 0.0)) throw DomainError("bessel_i_d2: requires z > 0");
  const ScaledSum s = i_scaled_sum(nu, z, policy);
  return std::exp(s.log_factor + z) * s.sum.d2;
}

}  // namespace bernstein
