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
 * @file hypercomplex.hpp
 * @brief Complex and quaternion arithmetic, plus the one-point extension
 *        Q ∪ {∞} used as the target of the quaternionic stereographic map.
 *
 * A quaternion is stored as a complex pair q = z1 + z2 e2 with
 * z1 = x0 + x1 e1 and z2 = x2 + x3 e1, so that q = x0 + x1 e1 + x2 e2 + x3 e3.
 * The only rule needed to multiply in this form is e2 z = conj(z) e2.
 */

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <variant>

namespace hopfdual {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <std::floating_point T = double>
class Quaternion {
 public:
  using value_type = T;
  using complex_type = std::complex<T>;

  constexpr Quaternion() = default;
  constexpr Quaternion(complex_type z1, complex_type z2) : z1_{z1}, z2_{z2} {}
  // Real scalar embedding.
  constexpr Quaternion(T real) : z1_{real, T{0}} {}  // NOLINT(google-explicit-constructor)

  static constexpr Quaternion from_components(T x0, T x1, T x2, T x3) {
    return {{x0, x1}, {x2, x3}};
  }
  static constexpr Quaternion from_components(const std::array<T, 4>& x) {
    return from_components(x[0], x[1], x[2], x[3]);
  }

  static constexpr Quaternion e0() { return from_components(1, 0, 0, 0); }
  static constexpr Quaternion e1() { return from_components(0, 1, 0, 0); }
  static constexpr Quaternion e2() { return from_components(0, 0, 1, 0); }
  static constexpr Quaternion e3() { return from_components(0, 0, 0, 1); }

  constexpr complex_type z1() const { return z1_; }
  constexpr complex_type z2() const { return z2_; }

  /// Real 4-tuple (x0, x1, x2, x3) along (e0, e1, e2, e3).
  constexpr std::array<T, 4> components() const {
    return {z1_.real(), z1_.imag(), z2_.real(), z2_.imag()};
  }

  constexpr T norm_squared() const { return std::norm(z1_) + std::norm(z2_); }
  T norm() const { return std::hypot(std::abs(z1_), std::abs(z2_)); }

  /// conj(z1 + z2 e2) = conj(z1) - z2 e2
  constexpr Quaternion conj() const { return {std::conj(z1_), -z2_}; }

  /// conj(q) / |q|^2. Throws std::domain_error for q = 0; the projection
  /// layer decides what a vanishing denominator means.
  Quaternion inverse() const {
    const T n2 = norm_squared();
    if (!(n2 > T{0})) {
      throw std::domain_error("quaternion inverse: zero quaternion");
    }
    return conj() / n2;
  }

  constexpr Quaternion operator-() const { return {-z1_, -z2_}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    z1_ -= o.z1_;
    z2_ -= o.z2_;
    return *this;
  }
  constexpr Quaternion& operator*=(T s) {
    z1_ *= s;
    z2_ *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(T s) {
    z1_ /= s;
    z2_ /= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, T s) { return a *= s; }
  friend constexpr Quaternion operator*(T s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, T s) { return a /= s; }

  // (a1 + a2 e2)(b1 + b2 e2) = (a1 b1 - a2 conj(b2)) + (a1 b2 + a2 conj(b1)) e2
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.z1_ * b.z1_ - a.z2_ * std::conj(b.z2_),
            a.z1_ * b.z2_ + a.z2_ * std::conj(b.z1_)};
  }

  /// Bitwise equality of all four components.
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    const auto x = q.components();
    return os << '(' << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << ')';
  }

 private:
  complex_type z1_{};
  complex_type z2_{};
};

using Quat = Quaternion<double>;

template <std::floating_point T>
Quaternion<T> mul(const Quaternion<T>& a, const Quaternion<T>& b) {
  return a * b;
}
template <std::floating_point T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return q.conj();
}
template <std::floating_point T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  return q.inverse();
}
template <std::floating_point T>
T norm(const Quaternion<T>& q) {
  return q.norm();
}

inline constexpr double kDefaultEqualityEps = 1e-12;

/// Componentwise comparison with an absolute tolerance.
template <std::floating_point T>
bool approx_equal(const Quaternion<T>& a, const Quaternion<T>& b,
                  T eps = static_cast<T>(kDefaultEqualityEps)) {
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(std::abs(x[i] - y[i]) <= eps)) return false;
  }
  return true;
}

/// Marker for the point at infinity of the extended quaternions.
struct Infinity {
  friend constexpr bool operator==(Infinity, Infinity) { return true; }
};

inline constexpr Infinity kInfinity{};

/// Element of Q ∪ {∞}.
template <std::floating_point T = double>
class ExtendedQuaternion {
 public:
  constexpr ExtendedQuaternion(Quaternion<T> q) : value_{q} {}  // NOLINT
  constexpr ExtendedQuaternion(Infinity) : value_{kInfinity} {}  // NOLINT

  constexpr bool is_infinite() const { return std::holds_alternative<Infinity>(value_); }
  constexpr bool is_finite() const { return !is_infinite(); }

  /// Throws std::bad_variant_access at infinity.
  constexpr const Quaternion<T>& finite() const { return std::get<Quaternion<T>>(value_); }

  friend constexpr bool operator==(const ExtendedQuaternion&, const ExtendedQuaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExtendedQuaternion& q) {
    if (q.is_infinite()) return os << "inf";
    return os << q.finite();
  }

 private:
  std::variant<Quaternion<T>, Infinity> value_;
};

using ExtQuat = ExtendedQuaternion<double>;

template <std::floating_point T>
bool approx_equal(const ExtendedQuaternion<T>& a, const ExtendedQuaternion<T>& b,
                  T eps = static_cast<T>(kDefaultEqualityEps)) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return approx_equal(a.finite(), b.finite(), eps);
}

}  // namespace hopfdual
