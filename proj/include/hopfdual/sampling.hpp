// Copyright 2026 The hopfdual Authors
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

#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic state ensembles.
 *
 * Every sample i is drawn from its own std::mt19937_64 seeded with
 * substream_seed(seed, i), so output depends only on (seed, i) and
 * multithreaded generation reproduces serial generation exactly.
 *
 * Normal variates use the Marsaglia polar method on top of 53-bit uniforms
 * taken from the engine output, so no implementation-defined
 * std::*_distribution is involved.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "state.hpp"

namespace hopfdual {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_{seed} {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (spare_) {
      const double out = *spare_;
      spare_.reset();
      return out;
    }
    double u = 0.0, v = 0.0, s = 0.0;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    return u * f;
  }

  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

using Qubit = std::array<Complex, 2>;
using Unitary2 = std::array<std::array<Complex, 2>, 2>;

inline Qubit random_qubit(NormalSource& rng) {
  Qubit q{rng.complex_normal(), rng.complex_normal()};
  const double n = std::hypot(std::abs(q[0]), std::abs(q[1]));
  return {q[0] / n, q[1] / n};
}

/// Haar-random SU(2) element [[a, -conj(b)], [b, conj(a)]].
inline Unitary2 random_unitary(NormalSource& rng) {
  const Qubit q = random_qubit(rng);
  return {{{q[0], -std::conj(q[1])}, {q[1], std::conj(q[0])}}};
}

/// (u (x) w)|s>
inline TwoQubitState apply_local(const TwoQubitState& s, const Unitary2& u, const Unitary2& w) {
  TwoQubitState::Amplitudes out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out[2 * i + j] += u[i][k] * w[j][l] * s.at(k, l);
  return TwoQubitState::make(out, /*normalize=*/true);
}

namespace ensemble {
struct Haar {};
struct Separable {};
struct FixedConcurrence {
  double concurrence = 0.0;
};
/// theta on a uniform grid over [0, pi], phi uniform per sample.
struct BlochGrid {};
}  // namespace ensemble

using Ensemble = std::variant<ensemble::Haar, ensemble::Separable, ensemble::FixedConcurrence,
                              ensemble::BlochGrid>;

struct SampleSpec {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  Ensemble ensemble = ensemble::Haar{};

  void validate() const {
    if (count < 1) throw std::invalid_argument("SampleSpec: count must be >= 1");
    if (const auto* fc = std::get_if<ensemble::FixedConcurrence>(&ensemble)) {
      if (!(fc->concurrence >= 0.0 && fc->concurrence <= 1.0)) {
        throw std::invalid_argument("SampleSpec: concurrence outside [0, 1]");
      }
    }
  }
};

/// Eight standard normals, normalized.
inline TwoQubitState haar_state(NormalSource& rng) {
  TwoQubitState::Amplitudes a{};
  for (auto& x : a) x = rng.complex_normal();
  return TwoQubitState::make(a, /*normalize=*/true);
}

inline TwoQubitState separable_state(NormalSource& rng) {
  const Qubit a = random_qubit(rng);
  const Qubit b = random_qubit(rng);
  return TwoQubitState::make({a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]},
                             /*normalize=*/true);
}

/// Schmidt coefficients (lambda1, lambda2) with 2 lambda1 lambda2 = C.
inline std::pair<double, double> schmidt_coefficients_for(double concurrence) {
  const double root = std::sqrt((1.0 - concurrence) * (1.0 + concurrence));
  return {std::sqrt(0.5 * (1.0 + root)), std::sqrt(0.5 * (1.0 - root))};
}

/// lambda1|00> + lambda2|11> dressed with independent Haar unitaries on
/// both factors.
inline TwoQubitState fixed_concurrence_state(NormalSource& rng, double concurrence) {
  const auto [l1, l2] = schmidt_coefficients_for(concurrence);
  const TwoQubitState core = TwoQubitState::make({l1, 0.0, 0.0, l2}, /*normalize=*/true);
  const Unitary2 u = random_unitary(rng);
  const Unitary2 w = random_unitary(rng);
  return apply_local(core, u, w);
}

/// Sample `index` of `spec`; depends only on (spec, index).
inline TwoQubitState sample_at(const SampleSpec& spec, std::size_t index) {
  NormalSource rng{substream_seed(spec.seed, index)};
  return std::visit(
      [&](const auto& e) -> TwoQubitState {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, ensemble::Haar>) {
          return haar_state(rng);
        } else if constexpr (std::is_same_v<E, ensemble::Separable>) {
          return separable_state(rng);
        } else if constexpr (std::is_same_v<E, ensemble::FixedConcurrence>) {
          return fixed_concurrence_state(rng, e.concurrence);
        } else {
          const double theta =
              spec.count > 1 ? std::numbers::pi * static_cast<double>(index) /
                                   static_cast<double>(spec.count - 1)
                             : 0.0;
          const double phi = 2.0 * std::numbers::pi * rng.uniform();
          return bloch_state({std::min(theta, std::numbers::pi), phi});
        }
      },
      spec.ensemble);
}

/// All samples of `spec`, generated on `threads` workers (0 picks the
/// hardware concurrency). Output order is the index order regardless.
inline std::vector<TwoQubitState> generate(const SampleSpec& spec, unsigned threads = 1) {
  spec.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<TwoQubitState>> slots(spec.count);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) slots[i] = sample_at(spec, i);
  };
  if (threads == 1 || spec.count < 2) {
    work(0, spec.count);
  } else {
    const std::size_t chunk = (spec.count + threads - 1) / threads;
    std::vector<std::jthread> pool;
    for (std::size_t begin = 0; begin < spec.count; begin += chunk) {
      pool.emplace_back(work, begin, std::min(spec.count, begin + chunk));
    }
  }
  std::vector<TwoQubitState> out;
  out.reserve(spec.count);
  for (auto& s : slots) out.push_back(*s);
  return out;
}

inline std::vector<TwoQubitState> sample_haar(const SampleSpec& spec, unsigned threads = 1) {
  if (!std::holds_alternative<ensemble::Haar>(spec.ensemble)) {
    throw std::invalid_argument("sample_haar: ensemble is not haar");
  }
  return generate(spec, threads);
}

inline std::vector<TwoQubitState> sample_fixed_concurrence(const SampleSpec& spec,
                                                           unsigned threads = 1) {
  if (!std::holds_alternative<ensemble::FixedConcurrence>(spec.ensemble)) {
    throw std::invalid_argument("sample_fixed_concurrence: ensemble is not fixed-concurrence");
  }
  return generate(spec, threads);
}

}  // namespace hopfdual
