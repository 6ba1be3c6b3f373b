#pragma once

// Discrete positive differential energy operators (PDEOs).
//
// A PDEO of order k applies the Teager-Kaiser kernel to the m_k-th discrete
// derivative of the signal, where m_k picks the k-th spectral moment of the
// energy. Unlike the plain DEOs, the total energy measured through a PDEO is
// non-negative for every order.

#include <cmath>
#include <string>

#include "heo/deo.hpp"
#include "heo/detail/ranged.hpp"
#include "heo/types.hpp"

namespace heo {

/// Derivative order used inside the order-k PDEO:
///   m_k = (k-1)/2 for odd k,  k/2 - 1 for even k.
inline int m_order(int k) {
  if (k < 1)
    throw OrderOutOfRange("m_order: k must be >= 1, got " + std::to_string(k));
  return (k % 2 != 0) ? (k - 1) / 2 : k / 2 - 1;
}

/// Ordinary discrete PDEO of order k >= 1. Orders 1 and 2 are identically
/// zero. The direct form evaluates the parity branches
///   TKEO(x_n) + TKEO(x_{n-m}) - Y_{2-m}(x_n) - Y_{m+2}(x_{n-m}),  m = m_k,
/// with the sub-order operators evaluated by the verbatim ordinary-DEO
/// quadratic form (negative orders included). The verification form applies
/// the TKEO to the shift difference x_n - x_{n-m} directly.
inline OperatorOutput ordinary_pdeo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::PdeoOrdinary, k);
  const auto in = detail::from_signal(x);
  const int m = m_order(k);
  if (form == Form::Verification) {
    const auto d = detail::sub(in, detail::shifted(in, -m));
    return detail::to_output(detail::tkeo(d), x.size());
  }
  if (k <= 2) return detail::to_output(detail::zeros_like(in), x.size());
  const auto psi = detail::tkeo(in);
  auto r = detail::add(psi, detail::shifted(psi, -m));
  r = detail::sub(r, detail::ordinary(in, 2 - m));
  r = detail::sub(r, detail::shifted(detail::ordinary(in, m + 2), -m));
  return detail::to_output(r, x.size());
}

/// Backward discrete PDEO: TKEO(D_b^{(m_k)}(x)), valid [m_k+1, N-2].
/// The verification form is the double-sum expansion in ordinary DEOs,
///   sum_{i,j} C(m,i) C(m,j) (-1)^{i+j} Y_{i-j+2}(x_{n-i}).
inline OperatorOutput backward_pdeo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::PdeoBackward, k);
  const auto in = detail::from_signal(x);
  const int m = m_order(k);
  if (form == Form::Direct)
    return detail::to_output(detail::tkeo(detail::bdiff(in, m)), x.size());
  detail::Ranged acc;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const double coeff = detail::sign_pow(i + j) *
                           static_cast<double>(binomial(m, i)) *
                           static_cast<double>(binomial(m, j));
      detail::accumulate(
          acc, detail::scaled(detail::shifted(detail::ordinary(in, i - j + 2), -i), coeff));
    }
  }
  return detail::to_output(acc, x.size());
}

/// Symmetric discrete PDEO: TKEO(D_s^{(m_k)}(x)), valid [m_k+1, N-2-m_k].
/// The verification form is the compact double sum in ordinary DEOs,
///   2^{-2m} sum_{i,j} C(m,i) C(m,j) (-1)^{i+j} Y_{2(i-j+1)}(x_{n+m-2i}).
inline OperatorOutput symmetric_pdeo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::PdeoSymmetric, k);
  const auto in = detail::from_signal(x);
  const int m = m_order(k);
  if (form == Form::Direct)
    return detail::to_output(detail::tkeo(detail::sdiff(in, m)), x.size());
  detail::Ranged acc;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const double coeff = detail::sign_pow(i + j) *
                           static_cast<double>(binomial(m, i)) *
                           static_cast<double>(binomial(m, j));
      detail::accumulate(
          acc,
          detail::scaled(detail::shifted(detail::ordinary(in, 2 * (i - j + 1)), m - 2 * i), coeff));
    }
  }
  return detail::to_output(detail::scaled(std::move(acc), std::ldexp(1.0, -2 * m)), x.size());
}

/// Uniform dispatch over all eight operator kinds.
inline OperatorOutput apply_operator(OperatorKind kind, const Signal& x, int k,
                                     Form form = Form::Direct) {
  switch (kind) {
    case OperatorKind::Ordinary: return ordinary_deo(x, k);
    case OperatorKind::Backward: return backward_deo(x, k, form);
    case OperatorKind::Symmetric: return symmetric_deo(x, k, form);
    case OperatorKind::Alternative: return alternative_deo(x, k, form);
    case OperatorKind::APrime: return aprime_deo(x, k, form);
    case OperatorKind::PdeoOrdinary: return ordinary_pdeo(x, k, form);
    case OperatorKind::PdeoBackward: return backward_pdeo(x, k, form);
    case OperatorKind::PdeoSymmetric: return symmetric_pdeo(x, k, form);
  }
  throw InvalidArgument("apply_operator: bad operator kind");
}

}  // namespace heo
