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
 * @file verify.hpp
 * @brief Property sweep over sampled states.
 *
 * Each check reports the largest deviation seen and the tolerance it was
 * held to. Tolerances scale with the base tolerance `tol` so that the
 * default tol = 1e-10 gives:
 *
 *   identity, sphere_closure, fringe_visibility, purity_relation,
 *   second_subsystem_identity, unit_quaternion_balance      1e-10
 *   dual_route                                               1e-9
 *   concurrence_oracle, wootters_coordinates, separable_plane 1e-12
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "classify.hpp"
#include "oracle.hpp"
#include "projection.hpp"
#include "sampling.hpp"
#include "state.hpp"

namespace hopfdual {

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// The measures under test. Swappable so the harness can be fed a
/// deliberately broken implementation.
struct Measures {
  std::function<double(const TwoQubitState&)> visibility = hopfdual::visibility;
  std::function<double(const TwoQubitState&)> distinguishability = hopfdual::distinguishability;
  std::function<double(const TwoQubitState&)> concurrence = hopfdual::concurrence;
};

/// Below this |q2| the geometric route is ill conditioned and skipped.
inline constexpr double kDualRouteMinQ2 = 1e-7;

inline constexpr double kDefaultVerifyTol = 1e-10;

namespace detail {

class Tracker {
 public:
  Tracker(std::string name, double tolerance) : result_{std::move(name), 0, 0.0, tolerance, false} {}

  void observe(double error) {
    ++result_.samples;
    // NaN must fail the check, so it is pinned to +inf.
    if (std::isnan(error)) error = std::numeric_limits<double>::infinity();
    result_.max_error = std::max(result_.max_error, error);
  }
  void fail() { failed_ = true; }

  CheckResult finish() const {
    CheckResult out = result_;
    out.passed = !failed_ && out.max_error <= out.tolerance;
    return out;
  }

 private:
  CheckResult result_;
  bool failed_ = false;
};

// Rescales the two photon branches so that p0 = p1 = 1/2.
inline std::optional<TwoQubitState> balance_paths(const TwoQubitState& s) {
  const auto [p0, p1] = s.path_probabilities();
  if (p0 < 1e-6 || p1 < 1e-6) return std::nullopt;
  const double f0 = std::sqrt(0.5 / p0);
  const double f1 = std::sqrt(0.5 / p1);
  return TwoQubitState::make({s[0] * f0, s[1] * f0, s[2] * f1, s[3] * f1}, /*normalize=*/true);
}

}  // namespace detail

/// Runs every check over the given Haar-like and separable samples.
inline VerificationReport verify_states(std::span<const TwoQubitState> states,
                                        std::span<const TwoQubitState> separable,
                                        double tol = kDefaultVerifyTol,
                                        const Measures& measures = {}) {
  detail::Tracker identity{"identity", tol};
  detail::Tracker closure{"sphere_closure", tol};
  detail::Tracker dual{"dual_route", 10.0 * tol};
  detail::Tracker oracle_c{"concurrence_oracle", 0.01 * tol};
  detail::Tracker wootters{"wootters_coordinates", 0.01 * tol};
  detail::Tracker fringe{"fringe_visibility", tol};
  detail::Tracker purity_rel{"purity_relation", tol};
  detail::Tracker second{"second_subsystem_identity", tol};
  detail::Tracker plane{"separable_plane", 0.01 * tol};
  detail::Tracker balance{"unit_quaternion_balance", tol};

  for (const auto& s : states) {
    const double v = measures.visibility(s);
    const double d = measures.distinguishability(s);
    const double c = measures.concurrence(s);

    // V^2 + D^2 + C^2 = (sum |alpha|^2)^2 holds at any norm; comparing with
    // the stored norm keeps representation error of the amplitudes out.
    double n2 = 0.0;
    for (const auto& a : s.amplitudes()) n2 += std::norm(a);
    identity.observe(std::abs(v * v + d * d + c * c - n2 * n2));

    const S4Point p = coords_from_state(s);
    closure.observe(std::abs(p.norm_squared() - 1.0));
    const QuaternionSpinor sp = quaternify(s);
    const S4Point g = inverse_stereo(stereo_project(sp));
    closure.observe(std::abs(g.norm_squared() - 1.0));
    if (sp.q2.norm() >= kDualRouteMinQ2) {
      double worst = 0.0;
      for (std::size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(p[k] - g[k]));
      dual.observe(worst);
    }

    const Complex w = oracle::wootters_amplitude(s);
    oracle_c.observe(std::abs(c - std::abs(w)));
    wootters.observe(std::abs(Complex{p[3], p[4]} - w));

    fringe.observe(std::abs(fringe_extrema(s).visibility() - v));
    purity_rel.observe(std::abs(v * v + d * d - (2.0 * purity(reduced_density_photon(s)) - 1.0)));

    const DualityTriad t2 = second_subsystem_triad(s);
    second.observe(std::abs(t2.V * t2.V + t2.D * t2.D + c * c - 1.0));

    // |Q| = 1 exactly when D = 0: the balanced companion must land on the
    // unit sphere of Q, and the predicate must agree on the original.
    if (auto b = detail::balance_paths(s)) {
      const ExtQuat q = stereo_project(quaternify(*b));
      balance.observe(q.is_finite() ? std::abs(q.finite().norm() - 1.0) : 1.0);
    }
    const ExtQuat q = stereo_project(sp);
    if (q.is_finite()) {
      const bool unit = std::abs(q.finite().norm() - 1.0) < tol;
      const bool zero_d = d < tol;
      if (unit != zero_d) balance.fail();
    }
  }

  for (const auto& s : separable) {
    double worst = std::abs(s.pi2());
    const ExtQuat q = stereo_project(quaternify(s));
    if (q.is_finite()) {
      const auto x = q.finite().components();
      worst = std::max({worst, std::abs(x[2]), std::abs(x[3])});
    }
    plane.observe(worst);
  }

  VerificationReport report;
  for (const auto* t : {&identity, &closure, &dual, &oracle_c, &wootters, &fringe, &purity_rel,
                        &second, &plane, &balance}) {
    report.checks.push_back(t->finish());
  }
  return report;
}

/// Samples `n` Haar and `n` separable states from `seed` and verifies them.
inline VerificationReport verify_suite(std::size_t n, std::uint64_t seed,
                                       double tol = kDefaultVerifyTol,
                                       const Measures& measures = {}, unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("verify_suite: n must be >= 1");
  const auto haar = generate({n, seed, ensemble::Haar{}}, threads);
  // Separable samples use a distinct seed stream.
  const auto sep = generate({n, mix64(seed ^ 0x5eb5eb5eb5eb5eb5ULL), ensemble::Separable{}}, threads);
  return verify_states(haar, sep, tol, measures);
}

}  // namespace hopfdual
