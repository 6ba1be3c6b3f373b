#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "heo/types.hpp"

namespace heo {

/// Exact binomial coefficient C(m, j) for 0 <= j <= m <= 60.
inline std::uint64_t binomial(int m, int j) {
  if (m < 0 || m > kMaxDiffOrder)
    throw OrderOutOfRange("binomial: order m=" + std::to_string(m) +
                          " outside [0, " + std::to_string(kMaxDiffOrder) + "]");
  if (j < 0 || j > m)
    throw InvalidArgument("binomial: j=" + std::to_string(j) +
                          " outside [0, m=" + std::to_string(m) + "]");
  if (j > m - j) j = m - j;
  std::uint64_t r = 1;
  // r * (m - j + i) is divisible by i at every step, so the division is exact.
  for (int i = 1; i <= j; ++i)
    r = r * static_cast<std::uint64_t>(m - j + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace detail {

/// Coefficients (-1)^j C(m, j), j = 0..m.
inline std::vector<double> alternating_binomials(int m) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    const double b = static_cast<double>(binomial(m, j));
    c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : -b;
  }
  return c;
}

}  // namespace detail

/// m-th order backward difference:
///   out[n] = sum_{j=0}^{m} (-1)^j C(m,j) x[n-j],   valid range [m, N-1].
inline OperatorOutput backward_diff(const Signal& x, int m) {
  if (m < 0 || m > kMaxDiffOrder)
    throw OrderOutOfRange("backward_diff: order m=" + std::to_string(m) +
                          " outside [0, " + std::to_string(kMaxDiffOrder) + "]");
  const std::size_t n = x.size();
  if (n <= static_cast<std::size_t>(m))
    throw SignalTooShort("backward_diff: need length > m=" + std::to_string(m) +
                         ", got " + std::to_string(n));
  const auto c = detail::alternating_binomials(m);
  OperatorOutput out;
  out.samples.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.first = static_cast<std::size_t>(m);
  out.last = n - 1;
  for (std::size_t i = out.first; i <= out.last; ++i) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j)
      acc += c[static_cast<std::size_t>(j)] * x[i - static_cast<std::size_t>(j)];
    out.samples[i] = acc;
  }
  return out;
}

/// m-th order symmetric (centred) difference:
///   out[n] = 2^{-m} sum_{j=0}^{m} (-1)^j C(m,j) x[n+m-2j],   valid [m, N-1-m].
inline OperatorOutput symmetric_diff(const Signal& x, int m) {
  if (m < 0 || m > kMaxDiffOrder)
    throw OrderOutOfRange("symmetric_diff: order m=" + std::to_string(m) +
                          " outside [0, " + std::to_string(kMaxDiffOrder) + "]");
  const std::size_t n = x.size();
  if (n <= 2 * static_cast<std::size_t>(m))
    throw SignalTooShort("symmetric_diff: need length > 2m=" +
                         std::to_string(2 * m) + ", got " + std::to_string(n));
  const auto c = detail::alternating_binomials(m);
  const double scale = std::ldexp(1.0, -m);
  OperatorOutput out;
  out.samples.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.first = static_cast<std::size_t>(m);
  out.last = n - 1 - static_cast<std::size_t>(m);
  for (std::size_t i = out.first; i <= out.last; ++i) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j)
      acc += c[static_cast<std::size_t>(j)] *
             x[i + static_cast<std::size_t>(m) - 2 * static_cast<std::size_t>(j)];
    out.samples[i] = acc * scale;
  }
  return out;
}

}  // namespace heo
