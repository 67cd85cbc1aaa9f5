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

// Reference computations by explicit matrix action on the 4-dimensional
// product space. Deliberately free of pi1 / pi2 so they can cross-check the
// closed forms in state.hpp and projection.hpp.

#include <array>
#include <complex>

#include "state.hpp"

namespace hopfdual::oracle {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;
using Matrix4 = std::array<std::array<Complex, 4>, 4>;
using Vector4 = std::array<Complex, 4>;

inline Matrix2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Matrix2 pauli_y() { return {{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}}; }
inline Matrix2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }
inline Matrix2 identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

/// Kronecker product with row index 2 i + j matching |i>|j>.
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

inline Vector4 apply(const Matrix4& m, const Vector4& v) {
  Vector4 out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
  return out;
}

/// <u|v>
inline Complex inner(const Vector4& u, const Vector4& v) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) acc += std::conj(u[k]) * v[k];
  return acc;
}

/// <psi|m|psi>
inline Complex expectation(const TwoQubitState& s, const Matrix4& m) {
  return inner(s.amplitudes(), oracle::apply(m, s.amplitudes()));
}

/// <psi*| sigma_y (x) sigma_y |psi>, where <psi| J = <psi*| and J is complex
/// conjugation in the product basis.
inline Complex wootters_amplitude(const TwoQubitState& s) {
  Vector4 psi_star = s.amplitudes();
  for (auto& a : psi_star) a = std::conj(a);
  return inner(psi_star, oracle::apply(kron(pauli_y(), pauli_y()), s.amplitudes()));
}

/// |<psi*| sigma_y (x) sigma_y |psi>|
inline double wootters_concurrence(const TwoQubitState& s) { return std::abs(wootters_amplitude(s)); }

}  // namespace hopfdual::oracle
