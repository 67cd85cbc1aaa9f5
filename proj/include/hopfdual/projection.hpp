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
 * @file projection.hpp
 * @brief S^7 -> S^4 through quaternionic spinors.
 *
 * Two routes reach the same point of S^4:
 *
 *  - geometric: quaternify (q1 = a0 + a1 e2, q2 = a2 + a3 e2), project to
 *    Q = q1 q2^{-1} in Q ∪ {∞}, then invert the stereographic projection;
 *  - expectation values: x0 = p0 - p1, x1 + i x2 = 2 pi1, x3 + i x4 = 2 pi2.
 *
 * The second route has no singularity and is the canonical one. On S^4,
 * D^2 = x0^2, V^2 = x1^2 + x2^2 and C^2 = x3^2 + x4^2.
 */

#include <array>
#include <cmath>

#include "hypercomplex.hpp"
#include "state.hpp"

namespace hopfdual {

struct QuaternionSpinor {
  Quat q1;
  Quat q2;
};

/// q1 = a0 + a1 e2, q2 = a2 + a3 e2.
inline QuaternionSpinor quaternify(const TwoQubitState& s) {
  return {Quat{s[0], s[1]}, Quat{s[2], s[3]}};
}

/// Below this |q2| the projection is the point at infinity.
inline constexpr double kInfinityThreshold = 1e-14;

/// Q = q1 q2^{-1}, or ∞ when |q2| < kInfinityThreshold.
inline ExtQuat stereo_project(const QuaternionSpinor& sp) {
  if (sp.q2.norm() < kInfinityThreshold) return kInfinity;
  return sp.q1 * sp.q2.inverse();
}

struct S4Point {
  std::array<double, 5> x{};

  double operator[](std::size_t i) const { return x[i]; }
  double norm_squared() const {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
  }
};

/// Inverse stereographic projection from the south-pole chart:
/// x0 = (|Q|^2 - 1)/(|Q|^2 + 1), (x1..x4) = 2 (Q0..Q3)/(|Q|^2 + 1), ∞ -> north pole.
inline S4Point inverse_stereo(const ExtQuat& q) {
  if (q.is_infinite()) return {{1.0, 0.0, 0.0, 0.0, 0.0}};
  const auto c = q.finite().components();
  const double n2 = q.finite().norm_squared();
  const double denom = n2 + 1.0;
  return {{(n2 - 1.0) / denom, 2.0 * c[0] / denom, 2.0 * c[1] / denom, 2.0 * c[2] / denom,
           2.0 * c[3] / denom}};
}

inline S4Point coords_from_state(const TwoQubitState& s) {
  const auto [p0, p1] = s.path_probabilities();
  const Complex w1 = 2.0 * s.pi1();
  const Complex w2 = 2.0 * s.pi2();
  return {{p0 - p1, w1.real(), w1.imag(), w2.real(), w2.imag()}};
}

/// Geometric route: inverse_stereo(stereo_project(quaternify(s))).
inline S4Point coords_via_projection(const TwoQubitState& s) {
  return inverse_stereo(stereo_project(quaternify(s)));
}

inline DualityTriad triad_from_coords(const S4Point& p) {
  return {std::hypot(p[1], p[2]), std::abs(p[0]), std::hypot(p[3], p[4])};
}

struct BallPoint {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double radius = 0.0;
};

/// (x0, x1, x2) of the S^4 point; its radius is sqrt(1 - C^2).
inline BallPoint ball_point(const TwoQubitState& s) {
  const S4Point p = coords_from_state(s);
  return {p[0], p[1], p[2], std::hypot(p[0], p[1], p[2])};
}

}  // namespace hopfdual
