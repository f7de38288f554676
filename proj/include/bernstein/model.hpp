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

#ifndef BERNSTEIN_MODEL_HPP_
#define BERNSTEIN_MODEL_HPP_

namespace bernstein {

// One-factor affine short-rate model
//   dr = sqrt(alpha r + beta) dw + (phi - lambda r) dt,
// observed through X = alpha r + beta started at x0.
struct ModelParams {
  double alpha = 0.0;
  double beta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double x0 = 0.0;

  // Throws DomainError unless alpha != 0, lambda != 0, x0 >= 0 and the
  // implied BESQ dimension is strictly positive.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Constants of the Bernstein description of Z = sqrt(X).
struct DerivedParams {
  ModelParams params;
  double phi_tilde = 0.0;  // phi + lambda beta / alpha
  double delta = 0.0;      // BESQ dimension 4 phi_tilde / alpha
  double nu = 0.0;         // BESQ index delta/2 - 1
  double A = 0.0;          // alpha^4 (delta-1)(delta-3) / 128
  double B = 0.0;          // lambda^2 / 8
  double theta = 0.0;      // diffusion coefficient of Z, alpha / 2
  double z0 = 0.0;         // sqrt(x0)

  double alpha() const { return params.alpha; }
  double lambda() const { return params.lambda; }
  double x0() const { return params.x0; }

  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

DerivedParams derive(const ModelParams& params);

// Which closed form applies for the law of Z_t.
class InitialCondition {
 public:
  enum class Kind { kZeroStart, kPositiveStart };

  static InitialCondition zero_start() { return InitialCondition(Kind::kZeroStart, 0.0); }
  // Throws DomainError unless x0 > 0.
  static InitialCondition positive_start(double x0);
  // The branch implied by the model's x0.
  static InitialCondition from(const ModelParams& params);

  Kind kind() const { return kind_; }
  double x0() const { return x0_; }
  bool is_zero() const { return kind_ == Kind::kZeroStart; }

  // Throws ModelMismatch if this branch disagrees with the model's x0.
  void check_matches(const DerivedParams& d) const;

 private:
  InitialCondition(Kind kind, double x0) : kind_(kind), x0_(x0) {}
  Kind kind_;
  double x0_;
};

// Time change of the BESQ clock: s(t) = alpha^2 (e^{lambda t} - 1) / (4 lambda).
double besq_clock(const DerivedParams& d, double t);

// V(q) = A / q^2 + B q^2. The time argument is accepted for symmetry with the
// heat equations; the potential does not depend on it.
double potential_v(const DerivedParams& d, double q);
double potential_v(const DerivedParams& d, double t, double q);

// Forward solution eta(t, q) = exp(lambda delta t / 4 - lambda q^2 / alpha^2) q^{(delta-1)/2}.
double eta(const DerivedParams& d, double t, double q);
double log_eta(const DerivedParams& d, double t, double q);

// Forward drift theta^2 d/dq log eta.
double drift_forward(const DerivedParams& d, double t, double q);
// Backward drift -theta^2 d/dq log eta_star for the chosen branch.
double drift_backward(const DerivedParams& d, double t, double q,
                      const InitialCondition& ic);

}  // namespace bernstein

#endif  // BERNSTEIN_MODEL_HPP_
