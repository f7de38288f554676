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

#include "bernstein/mc.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "bernstein/errors.hpp"
#include "bernstein/rng.hpp"

namespace bernstein {

namespace {

enum StreamTag : std::uint64_t { kBesqStream = 1, kEulerStream = 2 };

std::uint64_t stream_id(StreamTag tag, std::size_t chunk) {
  return (static_cast<std::uint64_t>(tag) << 56) | static_cast<std::uint64_t>(chunk);
}

// Fills `out` chunk by chunk; chunk c always sees the same generator stream
// whichever worker runs it.
template <typename ChunkFn>
void fill_chunks(std::vector<double>& out, ChunkFn&& fn) {
  const std::size_t chunks = (out.size() + kChunkSize - 1) / kChunkSize;
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t c = first; c < chunks; c += stride) {
      const std::size_t lo = c * kChunkSize;
      const std::size_t hi = std::min(out.size(), lo + kChunkSize);
      fn(c, std::span<double>(out.data() + lo, hi - lo));
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    run(0, 1);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
}

void check_n(std::size_t n) {
  if (n < 1) throw DomainError("sampler: n must be >= 1");
}

}  // namespace

Scheme Scheme::euler(int n_steps) {
  if (n_steps < 1) {
    throw SchemeError("Euler scheme needs n_steps >= 1, got " + std::to_string(n_steps));
  }
  return {Kind::kEuler, n_steps};
}

std::string Scheme::describe() const {
  return kind == Kind::kExact ? "exact" : "euler(" + std::to_string(n_steps) + ")";
}

SampleSet sample_besq(double delta, double t, double x0, std::size_t n,
                      std::uint64_t seed) {
  if (!(delta > 0.0)) throw DomainError("sample_besq: delta must be > 0");
  if (!(t > 0.0)) throw DomainError("sample_besq: t must be > 0");
  if (!(x0 >= 0.0)) throw DomainError("sample_besq: x0 must be >= 0");
  check_n(n);
  SampleSet s;
  s.values.resize(n);
  s.t = t;
  s.law = Law::kBesq;
  s.seed = seed;
  s.delta = delta;
  s.x0 = x0;
  const double shape = 0.5 * delta;
  const double poisson_mean = x0 / (2.0 * t);
  fill_chunks(s.values, [&](std::size_t chunk, std::span<double> out) {
    Philox4x32 engine(seed, stream_id(kBesqStream, chunk));
    Variates draw(engine);
    for (double& v : out) {
      const double k = poisson_mean > 0.0 ? static_cast<double>(draw.poisson(poisson_mean)) : 0.0;
      v = 2.0 * t * draw.gamma(shape + k);
    }
  });
  return s;
}

SampleSet sample_x(const DerivedParams& d, double t, std::size_t n,
                   std::uint64_t seed, const Scheme& scheme) {
  if (!(t > 0.0)) throw DomainError("sample_x: t must be > 0");
  check_n(n);
  SampleSet s;
  if (scheme.kind == Scheme::Kind::kExact) {
    s = sample_besq(d.delta, besq_clock(d, t), d.x0(), n, seed);
    const double decay = std::exp(-d.lambda() * t);
    for (double& v : s.values) v *= decay;
  } else {
    if (scheme.n_steps < 1) throw SchemeError("Euler scheme needs n_steps >= 1");
    s.values.resize(n);
    const double dt = t / scheme.n_steps;
    const double sqrt_dt = std::sqrt(dt);
    const double drift_level = d.alpha() * d.phi_tilde;
    const double l = d.lambda();
    const double a = d.alpha();
    fill_chunks(s.values, [&](std::size_t chunk, std::span<double> out) {
      Philox4x32 engine(seed, stream_id(kEulerStream, chunk));
      Variates draw(engine);
      for (double& v : out) {
        double x = d.x0();
        for (int k = 0; k < scheme.n_steps; ++k) {
          const double xp = std::max(x, 0.0);
          x += (drift_level - l * xp) * dt + a * std::sqrt(xp) * sqrt_dt * draw.normal();
        }
        v = std::max(x, 0.0);
      }
    });
  }
  s.t = t;
  s.law = Law::kX;
  s.seed = seed;
  s.scheme = scheme;
  s.params = d.params;
  s.delta = d.delta;
  s.x0 = d.x0();
  return s;
}

SampleSet sample_z(const DerivedParams& d, double t, std::size_t n,
                   std::uint64_t seed, const Scheme& scheme) {
  SampleSet s = sample_x(d, t, n, seed, scheme);
  for (double& v : s.values) v = std::sqrt(v);
  s.law = Law::kZ;
  return s;
}

KsResult ks_test(std::span<const double> values,
                 const std::function<double(double)>& cdf) {
  if (values.size() < 50) {
    throw DomainError("ks_test: need at least 50 samples for the asymptotic critical value");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return {std::clamp(d, 0.0, 1.0), sorted.size(), kKsCoefficient01 / std::sqrt(n)};
}

KsResult ks_test(const SampleSet& samples,
                 const std::function<double(double)>& cdf) {
  return ks_test(samples.values, cdf);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 50 || b.size() < 50) {
    throw DomainError("ks_two_sample: need at least 50 samples on each side");
  }
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(i / n - j / m));
  }
  const double eff = n * m / (n + m);
  return {d, static_cast<std::size_t>(eff), kKsCoefficient01 / std::sqrt(eff)};
}

double MomentSummary::standard_error() const {
  return n > 0 ? stddev / std::sqrt(static_cast<double>(n)) : 0.0;
}

MomentSummary summarize(std::span<const double> values,
                        const std::function<double(double)>& f) {
  MomentSummary m;
  m.n = values.size();
  if (values.empty()) return m;
  // Welford
  double mean = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (double v : values) {
    const double x = f(v);
    ++k;
    const double delta = x - mean;
    mean += delta / k;
    m2 += delta * (x - mean);
  }
  m.mean = mean;
  m.stddev = k > 1 ? std::sqrt(m2 / (k - 1)) : 0.0;
  return m;
}

}  // namespace bernstein
