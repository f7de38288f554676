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

#ifndef BERNSTEIN_MC_HPP_
#define BERNSTEIN_MC_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bernstein/densities.hpp"
#include "bernstein/model.hpp"

namespace bernstein {

struct Scheme {
  enum class Kind { kExact, kEuler };
  Kind kind = Kind::kExact;
  int n_steps = 0;

  static Scheme exact() { return {}; }
  // Full-truncation Euler with n_steps uniform steps; SchemeError if < 1.
  static Scheme euler(int n_steps);
  std::string describe() const;
};

struct SampleSet {
  std::vector<double> values;
  double t = 0.0;
  Law law = Law::kZ;
  std::uint64_t seed = 0;
  Scheme scheme;
  // Model the draws came from; BESQ draws record delta and x0 only.
  std::optional<ModelParams> params;
  double delta = 0.0;
  double x0 = 0.0;

  std::size_t n() const { return values.size(); }
};

// Draws per independent generator stream; fixed so that output does not
// depend on how chunks are spread over threads.
inline constexpr std::size_t kChunkSize = 8192;

// Exact BESQ^delta_{x0} marginal at time t: 2t Gamma(delta/2 + N) with
// N ~ Poisson(x0 / (2t)) (N = 0 when x0 = 0).
SampleSet sample_besq(double delta, double t, double x0, std::size_t n,
                      std::uint64_t seed);

// X_t, either as e^{-lambda t} Y(s) with Y exact BESQ, or by full-truncation
// Euler on dX = (alpha phi_tilde - lambda X) dt + alpha sqrt(X) dw.
SampleSet sample_x(const DerivedParams& d, double t, std::size_t n,
                   std::uint64_t seed, const Scheme& scheme = Scheme::exact());

// Z_t = sqrt(X_t).
SampleSet sample_z(const DerivedParams& d, double t, std::size_t n,
                   std::uint64_t seed, const Scheme& scheme = Scheme::exact());

struct KsResult {
  double statistic = 0.0;
  std::size_t n = 0;
  // Asymptotic critical value at level 0.01.
  double critical = 0.0;

  bool rejects() const { return statistic > critical; }
};

inline constexpr double kKsCoefficient01 = 1.6276;

// One-sample KS distance between the empirical CDF of the values and cdf.
// Requires at least 50 values.
KsResult ks_test(std::span<const double> values,
                 const std::function<double(double)>& cdf);
KsResult ks_test(const SampleSet& samples,
                 const std::function<double(double)>& cdf);

// Two-sample KS; n reports the effective size n m / (n + m).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct MomentSummary {
  double mean = 0.0;
  double stddev = 0.0;
  double standard_error() const;
  std::size_t n = 0;
};

// Mean and standard deviation of f(value).
MomentSummary summarize(std::span<const double> values,
                        const std::function<double(double)>& f);

}  // namespace bernstein

#endif  // BERNSTEIN_MC_HPP_
