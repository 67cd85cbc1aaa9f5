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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projection.hpp"
#include "state.hpp"

namespace hopfdual {

// Geometric strata of the B^3 ball. Strata overlap, so a state carries a set.
enum class Stratum : std::uint8_t {
  Separable,           // C = 0, boundary sphere
  MaximallyEntangled,  // C = 1, ball center
  WaveOnly,            // V = 1
  ParticleOnly,        // D = 1, poles
  WaveLess,            // V = 0
  ParticleLess,        // D = 0
  OnX0Axis,            // no coherence
  OnGreatDisc,         // x0 = 0
};

inline constexpr std::array<Stratum, 8> kAllStrata{
    Stratum::Separable, Stratum::MaximallyEntangled, Stratum::WaveOnly, Stratum::ParticleOnly,
    Stratum::WaveLess,  Stratum::ParticleLess,       Stratum::OnX0Axis, Stratum::OnGreatDisc};

constexpr std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::Separable: return "Separable";
    case Stratum::MaximallyEntangled: return "MaximallyEntangled";
    case Stratum::WaveOnly: return "WaveOnly";
    case Stratum::ParticleOnly: return "ParticleOnly";
    case Stratum::WaveLess: return "WaveLess";
    case Stratum::ParticleLess: return "ParticleLess";
    case Stratum::OnX0Axis: return "OnX0Axis";
    case Stratum::OnGreatDisc: return "OnGreatDisc";
  }
  return "?";
}

class StratumSet {
 public:
  constexpr StratumSet() = default;
  constexpr StratumSet(std::initializer_list<Stratum> labels) {
    for (auto l : labels) insert(l);
  }

  constexpr void insert(Stratum s) { bits_ |= bit(s); }
  constexpr bool contains(Stratum s) const { return (bits_ & bit(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  std::vector<Stratum> labels() const {
    std::vector<Stratum> out;
    for (auto s : kAllStrata) {
      if (contains(s)) out.push_back(s);
    }
    return out;
  }

  /// Label names in declaration order joined by `sep`.
  std::string join(std::string_view sep = ";") const {
    std::string out;
    for (auto s : labels()) {
      if (!out.empty()) out += sep;
      out += to_string(s);
    }
    return out;
  }

  friend constexpr bool operator==(StratumSet, StratumSet) = default;

 private:
  static constexpr std::uint8_t bit(Stratum s) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
  }
  std::uint8_t bits_ = 0;
};

inline constexpr double kDefaultClassifyTol = 1e-9;

inline StratumSet classify(const TwoQubitState& s, double tol = kDefaultClassifyTol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify: tolerance must be positive");
  const DualityTriad t = triad(s);
  const S4Point p = coords_from_state(s);
  StratumSet out;
  if (t.C <= tol) out.insert(Stratum::Separable);
  if (t.C >= 1.0 - tol) out.insert(Stratum::MaximallyEntangled);
  if (t.V >= 1.0 - tol) out.insert(Stratum::WaveOnly);
  if (t.D >= 1.0 - tol) out.insert(Stratum::ParticleOnly);
  if (t.V <= tol) {
    out.insert(Stratum::WaveLess);
    out.insert(Stratum::OnX0Axis);
  }
  if (t.D <= tol) out.insert(Stratum::ParticleLess);
  if (std::abs(p[0]) <= tol) out.insert(Stratum::OnGreatDisc);
  return out;
}

using Vector2 = std::array<Complex, 2>;

/// s = lambda1 |u1>|conj(v1)> + lambda2 |u2>|conj(v2)>, where u are the left
/// and v the right singular vectors of the amplitude matrix M[i][j] = <ij|s>.
struct SchmidtForm {
  double lambda1 = 1.0;
  double lambda2 = 0.0;
  std::array<Vector2, 2> left{};   // photon basis u1, u2
  std::array<Vector2, 2> right{};  // right singular vectors v1, v2

  /// Partner Schmidt vectors (|e~>, |f~>), the conjugates of `right`.
  std::array<Vector2, 2> partner_basis() const {
    return {Vector2{std::conj(right[0][0]), std::conj(right[0][1])},
            Vector2{std::conj(right[1][0]), std::conj(right[1][1])}};
  }
};

namespace detail {

inline double norm(const Vector2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }

inline Vector2 scaled(const Vector2& v, Complex s) { return {v[0] * s, v[1] * s}; }

// Orthogonal complement (-conj(v1), conj(v0)) of a unit 2-vector.
inline Vector2 complement(const Vector2& v) { return {-std::conj(v[1]), std::conj(v[0])}; }

// Rotates the phase so the leading component above `eps` is real positive.
inline Vector2 fix_phase(const Vector2& v, double eps = 1e-12) {
  const std::size_t i = std::abs(v[0]) > eps ? 0 : 1;
  const double a = std::abs(v[i]);
  if (a == 0.0) return v;
  Vector2 out = scaled(v, std::conj(v[i]) / a);
  out[i] = a;  // exactly real, not real up to rounding
  return out;
}

}  // namespace detail

/// Singular value decomposition of the 2x2 amplitude matrix.
///
/// lambda1^2 is the top eigenvalue of H = M^dagger M; lambda2 is taken as
/// |det M| / lambda1 so that 2 lambda1 lambda2 = 2|det M| = C without
/// cancellation. With lambda1 = lambda2 any orthonormal pair is valid and
/// the canonical pair ((1,0), (0,1)) is returned.
inline SchmidtForm schmidt_decompose(const TwoQubitState& s) {
  const Complex m00 = s.at(0, 0), m01 = s.at(0, 1), m10 = s.at(1, 0), m11 = s.at(1, 1);
  const double h00 = std::norm(m00) + std::norm(m10);
  const double h11 = std::norm(m01) + std::norm(m11);
  const Complex h01 = std::conj(m00) * m01 + std::conj(m10) * m11;
  const double gap = std::hypot(h00 - h11, 2.0 * std::abs(h01));
  const double det = std::abs(m00 * m11 - m01 * m10);

  SchmidtForm out;
  out.lambda1 = std::sqrt(0.5 * (h00 + h11 + gap));
  out.lambda2 = out.lambda1 > 0.0 ? det / out.lambda1 : 0.0;

  constexpr double kDegenerate = 1e-12;
  Vector2 v1{1.0, 0.0};
  if (gap > kDegenerate) {
    const double top = out.lambda1 * out.lambda1;
    // Two forms of the same eigenvector; keep the better conditioned one.
    const Vector2 a{h01, top - h00};
    const Vector2 b{top - h11, std::conj(h01)};
    const Vector2& pick = detail::norm(a) >= detail::norm(b) ? a : b;
    v1 = detail::scaled(pick, 1.0 / detail::norm(pick));
  }
  v1 = detail::fix_phase(v1);
  const Vector2 v2 = detail::fix_phase(detail::complement(v1));
  out.right = {v1, v2};

  auto apply = [&](const Vector2& v) {
    return Vector2{m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]};
  };
  const Vector2 mv1 = apply(v1);
  out.left[0] = detail::scaled(mv1, 1.0 / detail::norm(mv1));
  const Vector2 mv2 = apply(v2);
  const double n2 = detail::norm(mv2);
  // M v2 = lambda2 u2 fixes the phase of u2 when lambda2 is resolvable.
  out.left[1] = n2 > 1e-10 ? detail::scaled(mv2, 1.0 / n2) : detail::complement(out.left[0]);
  return out;
}

inline constexpr double kShellSlack = 1e-12;

/// sqrt(1 - C^2), the radius of the shell holding states of concurrence C.
inline double shell_radius(double concurrence) {
  if (!(concurrence >= -kShellSlack && concurrence <= 1.0 + kShellSlack)) {
    throw std::invalid_argument("shell_radius: concurrence outside [0, 1]");
  }
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return std::sqrt((1.0 - c) * (1.0 + c));
}

}  // namespace hopfdual
