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

#ifndef BERNSTEIN_SPECFUN_HPP_
#define BERNSTEIN_SPECFUN_HPP_

namespace bernstein {

// Truncation controls for the Bessel power series.
struct SeriesPolicy {
  double rel_tol = 1e-15;
  int max_terms = 500;
  // Above this |z| the exponentially scaled / asymptotic path is used.
  double large_z_switch = 30.0;

  void validate() const;
};

double gamma(double x);
// Overflow-safe ln Gamma(x) for x > 0.
double log_gamma(double x);

// A function value together with its first two derivatives.
struct BesselTriple {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Bessel function of the first kind J_lambda(z), real lambda >= 0, z >= 0.
double bessel_j(double lambda, double z, const SeriesPolicy& policy = {});
double bessel_j_d1(double lambda, double z, const SeriesPolicy& policy = {});
double bessel_j_d2(double lambda, double z, const SeriesPolicy& policy = {});
BesselTriple bessel_j_all(double lambda, double z,
                          const SeriesPolicy& policy = {});

// Modified Bessel function of the first kind I_nu(z) for nu > -1, z >= 0.
//
// For z <= policy.large_z_switch the defining power series is summed
// directly. Beyond the switch the Hankel expansion of e^{-z} I_nu(z) is
// used when it converges to policy.rel_tol, otherwise the power series is
// accumulated with a running rescale so nothing overflows. Derivatives are
// always obtained by differentiating whichever series is used term by term.
double bessel_i(double nu, double z, const SeriesPolicy& policy = {});
// e^{-z} I_nu(z); finite for every z the caller can represent.
double bessel_i_scaled(double nu, double z, const SeriesPolicy& policy = {});
double log_bessel_i(double nu, double z, const SeriesPolicy& policy = {});
double bessel_i_d1(double nu, double z, const SeriesPolicy& policy = {});
double bessel_i_d2(double nu, double z, const SeriesPolicy& policy = {});
// e^{-z} * (I_nu, I_nu', I_nu'') evaluated at z > 0.
BesselTriple bessel_i_scaled_all(double nu, double z,
                                 const SeriesPolicy& policy = {});

}  // namespace bernstein

#endif  // BERNSTEIN_SPECFUN_HPP_
