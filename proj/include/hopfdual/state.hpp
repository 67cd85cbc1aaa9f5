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
 * @file state.hpp
 * @brief Two-qubit pure states and the visibility / distinguishability /
 *        concurrence triad of the first ("photon") qubit.
 *
 * Amplitudes are ordered over |0e>, |0f>, |1e>, |1f>. The first factor is the
 * photon path qubit, the second the correlated partner reduced to its
 * two-dimensional span {|e>, |f>}.
 *
 * Two coefficients drive everything downstream:
 *   pi1 = conj(a2) a0 + conj(a3) a1   (photon coherence, V = 2|pi1|)
 *   pi2 = a1 a2 - a0 a3               (entanglement, C = 2|pi2|)
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypercomplex.hpp"

namespace hopfdual {

inline constexpr double kNormalizationSlack = 1e-9;

/// Normalized amplitude record (a0, a1, a2, a3).
class TwoQubitState {
 public:
  using Amplitudes = std::array<Complex, 4>;

  /// Validates finiteness and norm; rescales when `normalize` is set,
  /// otherwise rejects a norm that is off by more than kNormalizationSlack.
  static TwoQubitState make(const Amplitudes& amplitudes, bool normalize = false) {
    double n2 = 0.0;
    for (const auto& a : amplitudes) {
      if (!is_finite(a)) throw std::invalid_argument("make_state: non-finite amplitude");
      n2 += std::norm(a);
    }
    if (!(n2 > 0.0)) throw std::invalid_argument("make_state: all amplitudes are zero");
    const double n = std::sqrt(n2);
    if (normalize) {
      Amplitudes scaled = amplitudes;
      for (auto& a : scaled) a /= n;
      return TwoQubitState{scaled};
    }
    if (std::abs(n - 1.0) > kNormalizationSlack) {
      throw std::invalid_argument("make_state: amplitudes are not normalized (norm " +
                                  std::to_string(n) + ")");
    }
    return TwoQubitState{amplitudes};
  }

  const Amplitudes& amplitudes() const { return alpha_; }
  Complex operator[](std::size_t i) const { return alpha_[i]; }

  /// Amplitude of |i>|j> with i the photon index and j the partner index.
  Complex at(std::size_t i, std::size_t j) const { return alpha_[2 * i + j]; }

  /// Coherence coefficient pi1 = conj(a2) a0 + conj(a3) a1.
  Complex pi1() const {
    return std::conj(alpha_[2]) * alpha_[0] + std::conj(alpha_[3]) * alpha_[1];
  }
  /// Entanglement coefficient pi2 = a1 a2 - a0 a3.
  Complex pi2() const { return alpha_[1] * alpha_[2] - alpha_[0] * alpha_[3]; }

  /// Photon path probabilities (p0, p1).
  std::pair<double, double> path_probabilities() const {
    return {std::norm(alpha_[0]) + std::norm(alpha_[1]),
            std::norm(alpha_[2]) + std::norm(alpha_[3])};
  }

  friend bool operator==(const TwoQubitState&, const TwoQubitState&) = default;

 private:
  explicit TwoQubitState(const Amplitudes& a) : alpha_{a} {}
  Amplitudes alpha_{};
};

inline TwoQubitState make_state(const TwoQubitState::Amplitudes& amplitudes, bool normalize = false) {
  return TwoQubitState::make(amplitudes, normalize);
}

/// Reduced 2x2 density matrix. Stores rho00, rho01, rho11; rho10 is
/// conj(rho01) so the matrix is Hermitian by construction.
class DensityMatrix2 {
 public:
  DensityMatrix2(double rho00, Complex rho01, double rho11)
      : rho00_{rho00}, rho01_{rho01}, rho11_{rho11} {}

  double rho00() const { return rho00_; }
  double rho11() const { return rho11_; }
  Complex rho01() const { return rho01_; }
  Complex rho10() const { return std::conj(rho01_); }

  Complex operator()(std::size_t r, std::size_t c) const {
    if (r == 0 && c == 0) return rho00_;
    if (r == 1 && c == 1) return rho11_;
    return r == 0 ? rho01() : rho10();
  }

  double trace() const { return rho00_ + rho11_; }

  /// Eigenvalues, largest first.
  std::pair<double, double> eigenvalues() const {
    const double mean = 0.5 * (rho00_ + rho11_);
    const double half_gap = std::hypot(0.5 * (rho00_ - rho11_), std::abs(rho01_));
    return {mean + half_gap, mean - half_gap};
  }

 private:
  double rho00_;
  Complex rho01_;
  double rho11_;
};

/// Tr(rho^2) for a Hermitian 2x2 matrix.
inline double purity(const DensityMatrix2& rho) {
  return rho.rho00() * rho.rho00() + rho.rho11() * rho.rho11() + 2.0 * std::norm(rho.rho01());
}

/// Photon reduced state: trace over the partner.
inline DensityMatrix2 reduced_density_photon(const TwoQubitState& s) {
  const auto [p0, p1] = s.path_probabilities();
  return {p0, s.pi1(), p1};
}

/// Partner reduced state: trace over the photon, in the {|e>, |f>} basis.
inline DensityMatrix2 reduced_density_second(const TwoQubitState& s) {
  const auto& a = s.amplitudes();
  return {std::norm(a[0]) + std::norm(a[2]),
          std::conj(a[1]) * a[0] + std::conj(a[3]) * a[2],
          std::norm(a[1]) + std::norm(a[3])};
}

inline double visibility(const TwoQubitState& s) { return 2.0 * std::abs(s.pi1()); }

inline double distinguishability(const TwoQubitState& s) {
  const auto [p0, p1] = s.path_probabilities();
  return std::abs(p0 - p1);
}

inline double concurrence(const TwoQubitState& s) { return 2.0 * std::abs(s.pi2()); }

struct DualityTriad {
  double V = 0.0;
  double D = 0.0;
  double C = 0.0;

  double sum_of_squares() const { return V * V + D * D + C * C; }
};

inline DualityTriad triad(const TwoQubitState& s) {
  return {visibility(s), distinguishability(s), concurrence(s)};
}

/// Triad with V and D read from the partner's reduced state. C is symmetric
/// under exchange of the subsystems.
inline DualityTriad second_subsystem_triad(const TwoQubitState& s) {
  const DensityMatrix2 rho = reduced_density_second(s);
  return {2.0 * std::abs(rho.rho01()), std::abs(rho.rho00() - rho.rho11()), concurrence(s)};
}

/// Same state with the photon and partner factors swapped.
inline TwoQubitState swap_subsystems(const TwoQubitState& s) {
  const auto& a = s.amplitudes();
  return TwoQubitState::make({a[0], a[2], a[1], a[3]});
}

inline constexpr int kDefaultFringeGrid = 360;

struct FringeExtrema {
  double p_max = 0.0;
  double p_min = 0.0;

  /// (p_max - p_min) / (p_max + p_min)
  double visibility() const { return (p_max - p_min) / (p_max + p_min); }
};

/// Detection probability p_D = <psi|(1 + sigma_x (x) I)/2|psi> after a
/// relative phase e^{i delta} on the |1> branch of the photon.
inline double fringe_probability(const TwoQubitState& s, double delta) {
  const Complex phase = std::polar(1.0, delta);
  std::array<Complex, 4> psi = s.amplitudes();
  psi[2] *= phase;
  psi[3] *= phase;
  // (sigma_x (x) I) swaps |0j> and |1j>.
  const std::array<Complex, 4> flipped{psi[2], psi[3], psi[0], psi[1]};
  double norm2 = 0.0;
  Complex x_expect{0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) {
    norm2 += std::norm(psi[k]);
    x_expect += std::conj(psi[k]) * flipped[k];
  }
  return 0.5 * (norm2 + x_expect.real());
}

/// Scans p_D over `grid` uniform phases in [0, 2pi) together with the
/// analytic extremum delta = arg(gamma) and its antipode.
inline FringeExtrema fringe_extrema(const TwoQubitState& s, int grid = kDefaultFringeGrid) {
  if (grid < 4) throw std::invalid_argument("fringe_extrema: grid must be >= 4");
  FringeExtrema out{-1.0, 2.0};
  auto visit = [&](double delta) {
    const double p = fringe_probability(s, delta);
    out.p_max = std::max(out.p_max, p);
    out.p_min = std::min(out.p_min, p);
  };
  const double step = 2.0 * std::numbers::pi / grid;
  for (int k = 0; k < grid; ++k) visit(step * k);
  const double phase = std::arg(s.pi1());
  visit(phase);
  visit(phase + std::numbers::pi);
  return out;
}

struct BlochAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2pi)
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, with the partner in |e>.
inline TwoQubitState bloch_state(const BlochAngles& b) {
  if (!(b.theta >= 0.0 && b.theta <= std::numbers::pi)) {
    throw std::invalid_argument("bloch_state: theta outside [0, pi]");
  }
  if (!(b.phi >= 0.0 && b.phi < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("bloch_state: phi outside [0, 2pi)");
  }
  return TwoQubitState::make(
      {std::cos(0.5 * b.theta), 0.0, std::polar(std::sin(0.5 * b.theta), b.phi), 0.0});
}

/// mu|0>|chi1> + nu|1>|chi2> with chi1, chi2 in a d-dimensional space.
class CorrelatedState {
 public:
  CorrelatedState(Complex mu, Complex nu, std::vector<Complex> chi1, std::vector<Complex> chi2)
      : mu_{mu}, nu_{nu}, chi1_{std::move(chi1)}, chi2_{std::move(chi2)} {
    if (chi1_.empty() || chi1_.size() != chi2_.size()) {
      throw std::invalid_argument("CorrelatedState: chi1 and chi2 need the same dimension >= 1");
    }
    if (!is_finite(mu_) || !is_finite(nu_)) {
      throw std::invalid_argument("CorrelatedState: non-finite coefficient");
    }
    check_unit(chi1_, "chi1");
    check_unit(chi2_, "chi2");
    if (std::abs(std::norm(mu_) + std::norm(nu_) - 1.0) > kNormalizationSlack) {
      throw std::invalid_argument("CorrelatedState: |mu|^2 + |nu|^2 != 1");
    }
  }

  /// Rescales mu, nu and both chi vectors to satisfy the invariants.
  static CorrelatedState normalized(Complex mu, Complex nu, std::vector<Complex> chi1,
                                    std::vector<Complex> chi2) {
    rescale(chi1, "chi1");
    rescale(chi2, "chi2");
    const double n = std::hypot(std::abs(mu), std::abs(nu));
    if (!(n > 0.0)) throw std::invalid_argument("CorrelatedState: mu and nu are both zero");
    return {mu / n, nu / n, std::move(chi1), std::move(chi2)};
  }

  Complex mu() const { return mu_; }
  Complex nu() const { return nu_; }
  std::span<const Complex> chi1() const { return chi1_; }
  std::span<const Complex> chi2() const { return chi2_; }
  std::size_t dimension() const { return chi1_.size(); }

  /// Photon reduced state computed in the original d-dimensional space.
  DensityMatrix2 photon_density() const {
    Complex overlap{0.0, 0.0};  // <chi2|chi1>
    for (std::size_t k = 0; k < chi1_.size(); ++k) overlap += std::conj(chi2_[k]) * chi1_[k];
    return {std::norm(mu_), mu_ * std::conj(nu_) * overlap, std::norm(nu_)};
  }

 private:
  static double norm_of(std::span<const Complex> v, const char* name) {
    double n2 = 0.0;
    for (const auto& c : v) {
      if (!is_finite(c)) throw std::invalid_argument(std::string("CorrelatedState: non-finite ") + name);
      n2 += std::norm(c);
    }
    return std::sqrt(n2);
  }
  static void check_unit(std::span<const Complex> v, const char* name) {
    const double n = norm_of(v, name);
    if (!(n > 0.0)) throw std::invalid_argument(std::string("CorrelatedState: zero-norm ") + name);
    if (std::abs(n - 1.0) > kNormalizationSlack) {
      throw std::invalid_argument(std::string("CorrelatedState: ") + name + " is not unit norm");
    }
  }
  static void rescale(std::vector<Complex>& v, const char* name) {
    const double n = norm_of(v, name);
    if (!(n > 0.0)) throw std::invalid_argument(std::string("CorrelatedState: zero-norm ") + name);
    for (auto& c : v) c /= n;
  }

  Complex mu_;
  Complex nu_;
  std::vector<Complex> chi1_;
  std::vector<Complex> chi2_;
};

inline constexpr double kParallelThreshold = 1e-12;

/// Orthonormal pair {e, f} spanning chi1, chi2 together with the
/// coefficients chi1 = a e + b f, chi2 = c e + d f.
struct TwoDimensionalFrame {
  std::vector<Complex> e;
  std::vector<Complex> f;
  Complex a, b, c, d;
};

/// Gram-Schmidt on (chi1, chi2): e = chi1, f = chi2 minus its e component.
/// When chi2 is parallel to chi1, f is the lowest-index canonical basis
/// vector whose component orthogonal to e has norm >= 1/sqrt(2), normalized
/// (the coefficient of f is then zero up to rounding). For d = 1
/// no such vector exists and f is left as the zero vector.
inline TwoDimensionalFrame orthonormal_frame(std::span<const Complex> chi1,
                                             std::span<const Complex> chi2) {
  const std::size_t dim = chi1.size();
  TwoDimensionalFrame fr{{chi1.begin(), chi1.end()}, std::vector<Complex>(dim), 1.0, 0.0, 0.0, 0.0};

  auto inner = [dim](std::span<const Complex> u, std::span<const Complex> v) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < dim; ++k) acc += std::conj(u[k]) * v[k];
    return acc;
  };
  // Two projection passes; one loses orthogonality when chi2 is close to e.
  auto orthogonalize = [&](std::span<const Complex> v) {
    std::vector<Complex> r(v.begin(), v.end());
    for (int pass = 0; pass < 2; ++pass) {
      const Complex proj = inner(fr.e, r);
      for (std::size_t k = 0; k < dim; ++k) r[k] -= proj * fr.e[k];
    }
    double n2 = 0.0;
    for (const auto& z : r) n2 += std::norm(z);
    return std::pair{std::move(r), std::sqrt(n2)};
  };

  fr.c = inner(fr.e, chi2);
  if (std::abs(fr.c) <= 1.0 - kParallelThreshold) {
    auto [r, n] = orthogonalize(chi2);
    for (std::size_t k = 0; k < dim; ++k) fr.f[k] = r[k] / n;
    fr.d = inner(fr.f, chi2);
    return fr;
  }
  // Parallel: some canonical vector has |e_j|^2 <= 1/d <= 1/2, so the first
  // one with residual >= 1/sqrt(2) always exists for d >= 2.
  double best = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Complex> unit(dim);
    unit[j] = 1.0;
    auto [r, n] = orthogonalize(unit);
    if (n >= std::numbers::sqrt2 / 2 - 1e-12) {
      for (std::size_t k = 0; k < dim; ++k) fr.f[k] = r[k] / n;
      best = n;
      break;
    }
  }
  fr.d = best > 0.0 ? inner(fr.f, chi2) : Complex{0.0, 0.0};
  return fr;
}

/// Reduces mu|0>|chi1> + nu|1>|chi2> to the four-amplitude form
/// (mu a, mu b, nu c, nu d).
inline TwoQubitState embed_correlated(const CorrelatedState& cs) {
  const auto fr = orthonormal_frame(cs.chi1(), cs.chi2());
  // The frame coefficients are exact up to rounding; renormalize to absorb it.
  return TwoQubitState::make({cs.mu() * fr.a, cs.mu() * fr.b, cs.nu() * fr.c, cs.nu() * fr.d},
                             /*normalize=*/true);
}

}  // namespace hopfdual
