#pragma once

// Signal-with-offset algebra used internally to compose the operators.
// A Ranged holds samples v[0..] starting at index `base` of the source
// signal's index space; every derived quantity keeps its exact valid range,
// so boundary handling never needs case analysis at the call sites.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "heo/differences.hpp"
#include "heo/types.hpp"

namespace heo::detail {

using Index = std::ptrdiff_t;

struct Ranged {
  std::vector<double> v;
  Index base = 0;

  Index lo() const { return base; }
  Index hi() const { return base + static_cast<Index>(v.size()) - 1; }

  double at(Index n) const {
    assert(n >= lo() && n <= hi());
    return v[static_cast<std::size_t>(n - base)];
  }
};

inline Ranged from_signal(const Signal& x) {
  if (x.empty()) throw SignalTooShort("empty signal");
  return Ranged{x, 0};
}

/// y[n] = r[n + d]
inline Ranged shifted(Ranged r, Index d) {
  r.base -= d;
  return r;
}

inline Ranged make_zeros(Index lo, Index hi) {
  return Ranged{std::vector<double>(static_cast<std::size_t>(hi - lo + 1), 0.0), lo};
}

inline Ranged zeros_like(const Ranged& r) { return make_zeros(r.lo(), r.hi()); }

inline void require_range(Index lo, Index hi, const char* what) {
  if (lo > hi)
    throw SignalTooShort(std::string("signal too short for ") + what);
}

/// First-or-higher-order backward difference, valid on [lo+m, hi].
inline Ranged bdiff(const Ranged& r, int m) {
  if (m == 0) return r;
  const Index lo = r.lo() + m, hi = r.hi();
  require_range(lo, hi, "backward difference");
  const auto c = alternating_binomials(m);
  Ranged out{std::vector<double>(static_cast<std::size_t>(hi - lo + 1)), lo};
  for (Index n = lo; n <= hi; ++n) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) acc += c[static_cast<std::size_t>(j)] * r.at(n - j);
    out.v[static_cast<std::size_t>(n - lo)] = acc;
  }
  return out;
}

/// Symmetric difference of order m, valid on [lo+m, hi-m].
inline Ranged sdiff(const Ranged& r, int m) {
  if (m == 0) return r;
  const Index lo = r.lo() + m, hi = r.hi() - m;
  require_range(lo, hi, "symmetric difference");
  const auto c = alternating_binomials(m);
  const double scale = std::ldexp(1.0, -m);
  Ranged out{std::vector<double>(static_cast<std::size_t>(hi - lo + 1)), lo};
  for (Index n = lo; n <= hi; ++n) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) acc += c[static_cast<std::size_t>(j)] * r.at(n + m - 2 * j);
    out.v[static_cast<std::size_t>(n - lo)] = acc * scale;
  }
  return out;
}

/// Teager-Kaiser kernel r[n]^2 - r[n-1] r[n+1], valid on [lo+1, hi-1].
inline Ranged tkeo(const Ranged& r) {
  const Index lo = r.lo() + 1, hi = r.hi() - 1;
  require_range(lo, hi, "Teager-Kaiser window");
  Ranged out{std::vector<double>(static_cast<std::size_t>(hi - lo + 1)), lo};
  for (Index n = lo; n <= hi; ++n)
    out.v[static_cast<std::size_t>(n - lo)] = r.at(n) * r.at(n) - r.at(n - 1) * r.at(n + 1);
  return out;
}

/// Ordinary DEO quadratic form r[n] r[n+k-2] - r[n-1] r[n+k-1], evaluated
/// verbatim for any integer k (negative and zero orders included).
inline Ranged ordinary(const Ranged& r, int k) {
  const Index left = std::max<Index>(1, 2 - k);
  const Index right = std::max<Index>(0, k - 1);
  const Index lo = r.lo() + left, hi = r.hi() - right;
  require_range(lo, hi, "ordinary DEO window");
  Ranged out{std::vector<double>(static_cast<std::size_t>(hi - lo + 1)), lo};
  for (Index n = lo; n <= hi; ++n)
    out.v[static_cast<std::size_t>(n - lo)] =
        r.at(n) * r.at(n + k - 2) - r.at(n - 1) * r.at(n + k - 1);
  return out;
}

template <class F>
inline Ranged combine(const Ranged& a, const Ranged& b, F&& f, const char* what) {
  const Index lo = std::max(a.lo(), b.lo());
  const Index hi = std::min(a.hi(), b.hi());
  require_range(lo, hi, what);
  Ranged out{std::vector<double>(static_cast<std::size_t>(hi - lo + 1)), lo};
  for (Index n = lo; n <= hi; ++n)
    out.v[static_cast<std::size_t>(n - lo)] = f(a.at(n), b.at(n));
  return out;
}

inline Ranged mul(const Ranged& a, const Ranged& b) {
  return combine(a, b, [](double x, double y) { return x * y; }, "product");
}

inline Ranged sub(const Ranged& a, const Ranged& b) {
  return combine(a, b, [](double x, double y) { return x - y; }, "difference");
}

inline Ranged add(const Ranged& a, const Ranged& b) {
  return combine(a, b, [](double x, double y) { return x + y; }, "sum");
}

inline Ranged scaled(Ranged r, double c) {
  for (double& x : r.v) x *= c;
  return r;
}

/// Accumulate `acc += term` (intersecting ranges); starts from term if empty.
inline void accumulate(Ranged& acc, const Ranged& term) {
  if (acc.v.empty())
    acc = term;
  else
    acc = add(acc, term);
}

inline OperatorOutput to_output(const Ranged& r, std::size_t input_length) {
  assert(r.lo() >= 0 && r.hi() < static_cast<Index>(input_length));
  OperatorOutput out;
  out.samples.assign(input_length, std::numeric_limits<double>::quiet_NaN());
  out.first = static_cast<std::size_t>(r.lo());
  out.last = static_cast<std::size_t>(r.hi());
  for (std::size_t i = 0; i < r.v.size(); ++i) out.samples[out.first + i] = r.v[i];
  return out;
}

}  // namespace heo::detail
