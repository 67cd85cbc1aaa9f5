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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfdual/hypercomplex.hpp"
#include "support/test_oracles.hpp"

using hopfdual::Complex;
using hopfdual::ExtQuat;
using hopfdual::Quat;
using Catch::Matchers::WithinAbs;

namespace {

Quat random_quat(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return Quat::from_components(n(rng), n(rng), n(rng), n(rng));
}

void require_components(const Quat& q, std::array<double, 4> expected, double eps = 0.0) {
  const auto x = q.components();
  for (std::size_t i = 0; i < 4; ++i) REQUIRE_THAT(x[i], WithinAbs(expected[i], eps));
}

}  // namespace

TEST_CASE("basis multiplication table", "[hypercomplex]") {
  const Quat e1 = Quat::e1(), e2 = Quat::e2(), e3 = Quat::e3();
  CHECK(e1 * e1 == Quat{-1.0});
  CHECK(e2 * e2 == Quat{-1.0});
  CHECK(e3 * e3 == Quat{-1.0});
  CHECK(e1 * e2 * e3 == Quat{-1.0});
  CHECK(e1 * e2 == e3);
  CHECK(e2 * e1 == -e3);
  CHECK(e2 * e3 == e1);
  CHECK(e3 * e1 == e2);
  require_components((Quat{1.0} + e1) * (Quat{1.0} + e2), {1, 1, 1, 1});
}

TEST_CASE("complex pair and real 4-tuple views agree", "[hypercomplex]") {
  const Quat q{Complex{1.5, -2.0}, Complex{0.25, 3.0}};
  CHECK(q.components() == std::array<double, 4>{1.5, -2.0, 0.25, 3.0});
  CHECK(Quat::from_components(q.components()) == q);
  // z2 e2 = x2 e2 + x3 e3
  CHECK(Quat{0.0, Complex{0.0, 1.0}} == Quat::e3());
}

TEST_CASE("conjugate", "[hypercomplex]") {
  CHECK(hopfdual::conj(Quat{1.0}) == Quat{1.0});
  CHECK(hopfdual::conj(Quat::e2()) == -Quat::e2());
  const Quat q = Quat::from_components(1, 2, 3, 4);
  require_components(q.conj(), {1, -2, -3, -4});

  std::mt19937_64 rng{7};
  for (int k = 0; k < 1000; ++k) {
    const Quat a = random_quat(rng);
    const Quat p = a * a.conj();
    require_components(p, {a.norm_squared(), 0, 0, 0}, 1e-12 * (1 + a.norm_squared()));
  }
}

TEST_CASE("inverse", "[hypercomplex]") {
  require_components(hopfdual::inverse(Quat::e2()), {0, 0, -1, 0});
  require_components(hopfdual::inverse(Quat{2.0}), {0.5, 0, 0, 0});
  const Quat inv = (Quat{1.0} + Quat::e3()).inverse();
  require_components(inv, {0.5, 0, 0, -0.5}, 1e-16);
  require_components((Quat{1.0} + Quat::e3()) * inv, {1, 0, 0, 0}, 1e-15);

  // Checked against the 4x4 real left-multiplication representation.
  const Quat q = Quat::from_components(0.5, 0.5, 0.5, 0.5);
  const auto via_matrix = hopfdual::testing::matrix_product(q.components(), q.inverse().components());
  for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(via_matrix[i], WithinAbs(i == 0 ? 1.0 : 0.0, 1e-14));
  require_components(q * q.inverse(), {1, 0, 0, 0}, 1e-14);

  std::mt19937_64 rng{11};
  for (int k = 0; k < 1000; ++k) {
    const Quat a = random_quat(rng);
    require_components(a * a.inverse(), {1, 0, 0, 0}, 1e-14);
  }
}

TEST_CASE("inverse of zero is a domain error", "[hypercomplex]") {
  CHECK_THROWS_AS(Quat{}.inverse(), std::domain_error);
}

TEST_CASE("norm", "[hypercomplex]") {
  CHECK(hopfdual::norm(Quat{}) == 0.0);
  CHECK(Quat::from_components(1, 1, 1, 1).norm() == 2.0);
}

TEST_CASE("algebra properties over random samples", "[hypercomplex][property]") {
  std::mt19937_64 rng{2026};
  for (int k = 0; k < 2000; ++k) {
    const Quat a = random_quat(rng), b = random_quat(rng), c = random_quat(rng);
    const double scale = a.norm() * b.norm() * c.norm();

    // Multiplicativity
    CHECK_THAT((a * b).norm(), WithinAbs(a.norm() * b.norm(), 1e-13 * (1 + a.norm() * b.norm())));
    // Associativity
    CHECK(hopfdual::approx_equal((a * b) * c, a * (b * c), 1e-13 * (1 + scale)));
    // Anti-automorphism
    CHECK(hopfdual::approx_equal((a * b).conj(), b.conj() * a.conj(), 1e-13 * (1 + a.norm() * b.norm())));
    // Product agrees with the real matrix representation.
    const auto m = hopfdual::testing::matrix_product(a.components(), b.components());
    CHECK(hopfdual::approx_equal(a * b, Quat::from_components(m), 1e-13 * (1 + a.norm() * b.norm())));
  }
}

TEST_CASE("complex embedding is exact", "[hypercomplex][property]") {
  std::mt19937_64 rng{5};
  std::normal_distribution<double> n;
  for (int k = 0; k < 1000; ++k) {
    const Complex u{n(rng), n(rng)}, v{n(rng), n(rng)};
    const Quat p = Quat{u, 0.0} * Quat{v, 0.0};
    CHECK(p.z1() == u * v);
    CHECK(p.z2() == Complex{0.0, 0.0});
  }
}

TEST_CASE("tolerance equality vs exact equality", "[hypercomplex]") {
  const Quat a = Quat::from_components(1, 2, 3, 4);
  const Quat b = Quat::from_components(1, 2, 3, 4 + 1e-13);
  CHECK_FALSE(a == b);
  CHECK(hopfdual::approx_equal(a, b));
  CHECK_FALSE(hopfdual::approx_equal(a, b, 1e-14));
}

TEST_CASE("extended quaternions", "[hypercomplex]") {
  const ExtQuat inf = hopfdual::kInfinity;
  const ExtQuat zero = Quat{};
  CHECK(inf.is_infinite());
  CHECK(zero.is_finite());
  CHECK(inf == ExtQuat{hopfdual::kInfinity});
  CHECK_FALSE(inf == zero);
  CHECK_FALSE(hopfdual::approx_equal(inf, zero));
  CHECK_THROWS(inf.finite());
  std::ostringstream os;
  os << inf;
  CHECK(os.str() == "inf");
}
