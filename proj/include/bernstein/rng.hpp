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

#ifndef BERNSTEIN_RNG_HPP_
#define BERNSTEIN_RNG_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace bernstein {

// Philox4x32-10 counter-based generator. The 64-bit seed is the key; the
// 128-bit counter is split into a 64-bit stream id and a 64-bit position, so
// distinct streams of one seed are independent and can be handed to workers
// in any order.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  // Uniform double on the open interval (0, 1) with 53 random bits.
  double uniform();

  // The raw bijection, exposed for known-answer tests.
  static Block encrypt(Block counter, Key key);

 private:
  void refill();
  Key key_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  Block buffer_{};
  int used_ = 4;
};

// Samplers driven by a Philox4x32 stream. Written out rather than taken from
// <random> so draws are identical across standard libraries.
class Variates {
 public:
  explicit Variates(Philox4x32& engine) : engine_(engine) {}

  double uniform() { return engine_.uniform(); }
  double normal();
  // Gamma(shape, scale 1), shape > 0.
  double gamma(double shape);
  // Poisson(mean), mean >= 0.
  std::uint64_t poisson(double mean);

 private:
  Philox4x32& engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bernstein

#endif  // BERNSTEIN_RNG_HPP_
