#pragma once

// Closed-form cosine responses D_k(A, Omega) for every operator kind, and the
// two routes to the total energy of a finite-support signal: direct summation
// of the operator output over a zero-embedded copy of the signal, and the
// frequency-domain integral (1/pi) int_{-pi}^{pi} D_k(|X(e^{jW})|, W) dW.
// The two must agree; the sign of the DEO totals is the interesting part.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "heo/differences.hpp"
#include "heo/pdeo.hpp"
#include "heo/types.hpp"

namespace heo {

namespace detail {

inline double ipow(double base, int exp) {
  double r = 1.0;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r *= base;
    base *= base;
  }
  return r;
}

/// Steady-state value of TKEO(D_b^{(k/2-1)}(A cos(Omega n))), read off one
/// interior sample of a synthesised cosine. Kept free of the a' operator's
/// own summation path so the oracle stays independent of the code under test.
inline double aprime_even_steady_state(int k, double amplitude, double omega) {
  const int m = k / 2 - 1;
  const int centre = m + 1;  // window spans indices [0, m+2]
  std::array<double, kMaxOrder + 3> x{};
  for (int i = 0; i <= m + 2; ++i) x[static_cast<std::size_t>(i)] = amplitude * std::cos(omega * i);
  const auto diff_at = [&](int n) {
    double acc = 0.0, sign = 1.0;
    for (int j = 0; j <= m; ++j) {
      acc += sign * static_cast<double>(binomial(m, j)) * x[static_cast<std::size_t>(n - j)];
      sign = -sign;
    }
    return acc;
  };
  const double prev = diff_at(centre - 1);
  const double here = diff_at(centre);
  const double next = diff_at(centre + 1);
  return here * here - prev * next;
}

}  // namespace detail

/// Steady-state output of the (kind, k) operator to A cos(Omega n + theta).
/// Quadratic in A for every kind; the odd-order symmetric, alternative and a'
/// branches are identically zero.
inline double cosine_response(OperatorKind kind, int k, double amplitude, double omega) {
  check_operator_order(kind, k);
  const double a2 = amplitude * amplitude;
  switch (kind) {
    case OperatorKind::Ordinary:
      return a2 * std::sin(omega) * std::sin((k - 1) * omega);
    case OperatorKind::Backward: {
      const double p = detail::ipow(2.0 * std::sin(0.5 * omega), k);
      if (k % 2 != 0) {
        const double sign = detail::sign_pow((k + 1) / 2);
        return sign * p * a2 * 0.5 *
               (std::sin((0.5 * k - 1.0) * omega) + std::sin(0.5 * k * omega));
      }
      const double sign = detail::sign_pow(1 + k / 2);
      return sign * p * a2 * 0.5 *
             (std::cos((0.5 * k - 1.0) * omega) + std::cos(0.5 * k * omega));
    }
    case OperatorKind::Symmetric:
      if (k % 2 != 0) return 0.0;
      return detail::sign_pow(1 + k / 2) * a2 * detail::ipow(std::sin(omega), k);
    case OperatorKind::Alternative: {
      if (k % 2 != 0) return 0.0;
      // 2^k sin^k(W/2) cos^2(W/2); the 2^k factor is forced by the k = 2
      // initial condition (TKEO responds with A^2 sin^2 W).
      const double c = std::cos(0.5 * omega);
      return detail::sign_pow(1 + k / 2) * a2 * detail::ipow(2.0 * std::sin(0.5 * omega), k) * c * c;
    }
    case OperatorKind::APrime:
      if (k % 2 != 0) return 0.0;
      return detail::sign_pow(1 + k / 2) * detail::aprime_even_steady_state(k, amplitude, omega);
    case OperatorKind::PdeoOrdinary: {
      const double so = std::sin(omega);
      const double half = (k % 2 != 0) ? 0.25 * (k - 1) * omega : 0.25 * (k - 2) * omega;
      const double sh = std::sin(half);
      return 4.0 * a2 * so * so * sh * sh;
    }
    case OperatorKind::PdeoBackward: {
      const double so = std::sin(omega);
      const int e = (k % 2 != 0) ? k - 1 : k - 2;
      return a2 * so * so * detail::ipow(2.0 * std::sin(0.5 * omega), e);
    }
    case OperatorKind::PdeoSymmetric: {
      const int e = (k % 2 != 0) ? k + 1 : k;
      return a2 * detail::ipow(std::sin(omega), e);
    }
  }
  throw InvalidArgument("cosine_response: bad operator kind");
}

/// Sum of the defined samples of an operator output.
inline double total_energy(const OperatorOutput& y) {
  double acc = 0.0;
  for (double v : y.valid()) acc += v;
  return acc;
}

/// Total energy of a finite-support signal under the (kind, k) operator.
/// The signal is embedded in zeros with enough margin that every operator
/// window touching a nonzero sample lies in the valid range, mirroring the
/// doubly-infinite sum for finitely supported sequences.
inline double total_energy(OperatorKind kind, int k, const Signal& x) {
  check_operator_order(kind, k);
  const std::size_t pad = 2 * static_cast<std::size_t>(std::abs(k)) + 8;
  Signal padded(x.size() + 2 * pad, 0.0);
  std::copy(x.begin(), x.end(), padded.begin() + static_cast<std::ptrdiff_t>(pad));
  return total_energy(apply_operator(kind, padded, k));
}

inline constexpr std::size_t kDefaultSpectralGrid = std::size_t{1} << 16;

namespace detail {

inline void check_spectral_grid(std::size_t grid) {
  if (grid < 4096 || (grid & (grid - 1)) != 0)
    throw InvalidArgument("spectral grid must be a power of two >= 4096, got " +
                          std::to_string(grid));
}

/// |X(e^{jW})|^2 on the uniform grid W_i = -pi + i 2pi/G, i = 0..G, by direct
/// summation over the support. Per-sample rotators avoid a trig call per grid
/// point; the drift over one sweep is far below the trapezoid tolerance.
inline std::vector<double> dtft_power(const Signal& x, std::size_t grid) {
  const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
  std::vector<double> re(grid + 1, 0.0), im(grid + 1, 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double xn = x[n];
    if (xn == 0.0) continue;
    // e^{-jW n} at W = -pi is exactly (-1)^n
    double zr = (n % 2 == 0) ? 1.0 : -1.0, zi = 0.0;
    const double ang = h * static_cast<double>(n);
    const double wr = std::cos(ang), wi = -std::sin(ang);
    for (std::size_t i = 0; i <= grid; ++i) {
      re[i] += xn * zr;
      im[i] += xn * zi;
      const double t = zr * wr - zi * wi;
      zi = zr * wi + zi * wr;
      zr = t;
    }
  }
  std::vector<double> power(grid + 1);
  for (std::size_t i = 0; i <= grid; ++i) power[i] = re[i] * re[i] + im[i] * im[i];
  return power;
}

}  // namespace detail

/// Precomputed frequency-domain evaluation of the total-energy integral for a
/// fixed set of (kind, k) pairs. The unit-amplitude response tables are built
/// once; evaluate() then costs one DTFT per signal regardless of how many
/// pairs are requested.
class SpectralPlan {
public:
  explicit SpectralPlan(std::vector<std::pair<OperatorKind, int>> pairs,
                        std::size_t grid = kDefaultSpectralGrid)
      : pairs_(std::move(pairs)), grid_(grid) {
    detail::check_spectral_grid(grid_);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid_);
    rho_.reserve(pairs_.size());
    for (const auto& [kind, k] : pairs_) {
      check_operator_order(kind, k);
      std::vector<double> table(grid_ + 1);
      for (std::size_t i = 0; i <= grid_; ++i) {
        const double omega = -std::numbers::pi + h * static_cast<double>(i);
        table[i] = cosine_response(kind, k, 1.0, omega);
      }
      rho_.push_back(std::move(table));
    }
  }

  /// One total-energy value per configured (kind, k) pair, by the trapezoid
  /// rule in ascending frequency (the endpoint pair at -pi/pi carries half
  /// weight each, i.e. is counted once).
  std::vector<double> evaluate(const Signal& x) const {
    const std::vector<double> power = detail::dtft_power(x, grid_);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid_);
    std::vector<double> out(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto& rho = rho_[p];
      double acc = 0.5 * (rho.front() * power.front() + rho.back() * power.back());
      for (std::size_t i = 1; i < grid_; ++i) acc += rho[i] * power[i];
      out[p] = acc * h / std::numbers::pi;
    }
    return out;
  }

  const std::vector<std::pair<OperatorKind, int>>& pairs() const { return pairs_; }

private:
  std::vector<std::pair<OperatorKind, int>> pairs_;
  std::size_t grid_;
  std::vector<std::vector<double>> rho_;
};

/// Frequency-domain total energy of a finite-support signal:
///   (1/pi) int_{-pi}^{pi} D_k(|X(e^{jW})|, W) dW
inline double spectral_energy(OperatorKind kind, int k, const Signal& x,
                              std::size_t grid = kDefaultSpectralGrid) {
  return SpectralPlan({{kind, k}}, grid).evaluate(x)[0];
}

}  // namespace heo
