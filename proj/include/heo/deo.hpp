#pragma once

// Discrete differential energy operators (DEOs).
//
// Five discretisations of the order-k differential energy operator are
// provided: ordinary (pure time shifts), backward and symmetric (difference
// approximations of the derivatives), the alternative window-centred variant,
// and the a' variant obtained from the parity-free recursion. Each operator
// ships two independently coded routes (Form::Direct and Form::Verification,
// the published expansion or recursion) so that equivalence can be tested.

#include <cstdlib>
#include <string>

#include "heo/detail/ranged.hpp"
#include "heo/differences.hpp"
#include "heo/types.hpp"

namespace heo {

namespace detail {

inline double sign_pow(int p) { return (p % 2 == 0) ? 1.0 : -1.0; }

/// Recursion for the alternative DEO:
///   odd k :  D_b(Y_{k-1}(x_n))   - Y_{k-2}(D_b(x_{n+1}))
///   even k:  D_b(Y_{k-1}(x_{n+1})) - Y_{k-2}(D_b(x_n))
/// with Y_1 = 0 and Y_2 = TKEO.
inline Ranged alternative_recursion(const Ranged& x, int k) {
  if (k == 1) return zeros_like(x);
  if (k == 2) return tkeo(x);
  if (k % 2 != 0)
    return sub(bdiff(alternative_recursion(x, k - 1), 1),
               alternative_recursion(shifted(bdiff(x, 1), 1), k - 2));
  return sub(bdiff(shifted(alternative_recursion(x, k - 1), 1), 1),
             alternative_recursion(bdiff(x, 1), k - 2));
}

/// Parity-free recursion for the a' operator:
///   Y_k(x) = D_b(Y_{k-1}(x)) - Y_{k-2}(D_b(x)),  Y_1 = 0, Y_2 = TKEO.
inline Ranged aprime_recursion(const Ranged& x, int k) {
  if (k == 1) return zeros_like(x);
  if (k == 2) return tkeo(x);
  return sub(bdiff(aprime_recursion(x, k - 1), 1),
             aprime_recursion(bdiff(x, 1), k - 2));
}

}  // namespace detail

/// Ordinary discrete DEO of order k:
///   out[n] = x[n] x[n+k-2] - x[n-1] x[n+k-1]
/// The quadratic form is evaluated verbatim for any integer |k| <= 32,
/// which extends the operator to zero and negative orders.
inline OperatorOutput ordinary_deo(const Signal& x, int k) {
  check_operator_order(OperatorKind::Ordinary, k);
  return detail::to_output(detail::ordinary(detail::from_signal(x), k), x.size());
}

/// Teager-Kaiser energy operator, the ordinary DEO at k = 2.
inline OperatorOutput tkeo(const Signal& x) { return ordinary_deo(x, 2); }

/// Backward DEO of order k >= 1:
///   direct       D_b(x) D_b^{(k-1)}(x) - x D_b^{(k)}(x),   valid [k, N-1]
///   verification sum_{j=1}^{k} (-1)^j C(k-1, j-1) Y_j(x_{n-j+1})
inline OperatorOutput backward_deo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::Backward, k);
  const auto in = detail::from_signal(x);
  if (form == Form::Direct) {
    const auto r = detail::sub(detail::mul(detail::bdiff(in, 1), detail::bdiff(in, k - 1)),
                               detail::mul(in, detail::bdiff(in, k)));
    return detail::to_output(r, x.size());
  }
  detail::Ranged acc;
  for (int j = 1; j <= k; ++j) {
    const double coeff = detail::sign_pow(j) * static_cast<double>(binomial(k - 1, j - 1));
    detail::accumulate(acc, detail::scaled(detail::shifted(detail::ordinary(in, j), -(j - 1)), coeff));
  }
  return detail::to_output(acc, x.size());
}

/// Symmetric DEO of order k >= 1:
///   direct       D_s(x) D_s^{(k-1)}(x) - x D_s^{(k)}(x),   valid [k, N-1-k]
///   verification 2^{-k} sum_{j=0}^{k-1} (-1)^j C(k-1,j) (Y_{k-2j}(x_n) + Y_{k-2j}(x_{n+1}))
inline OperatorOutput symmetric_deo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::Symmetric, k);
  const auto in = detail::from_signal(x);
  if (form == Form::Direct) {
    const auto r = detail::sub(detail::mul(detail::sdiff(in, 1), detail::sdiff(in, k - 1)),
                               detail::mul(in, detail::sdiff(in, k)));
    return detail::to_output(r, x.size());
  }
  detail::Ranged acc;
  for (int j = 0; j <= k - 1; ++j) {
    const int order = k - 2 * j;
    const double coeff = detail::sign_pow(j) * static_cast<double>(binomial(k - 1, j));
    const auto y = detail::ordinary(in, order);
    detail::accumulate(acc, detail::scaled(detail::add(y, detail::shifted(y, 1)), coeff));
  }
  return detail::to_output(detail::scaled(std::move(acc), std::ldexp(1.0, -k)), x.size());
}

/// Alternative (window-centred) DEO of order k >= 1. k = 1 yields the zero
/// signal; k = 2 coincides with the TKEO. The direct form applies the
/// half-window shifts (k-1)/2 (odd k) and k/2, k/2-1 (even k), which are
/// integral for the respective parity branch by construction.
inline OperatorOutput alternative_deo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::Alternative, k);
  const auto in = detail::from_signal(x);
  if (k == 1) return detail::to_output(detail::zeros_like(in), x.size());
  if (form == Form::Verification)
    return detail::to_output(detail::alternative_recursion(in, k), x.size());
  detail::Ranged r;
  if (k % 2 != 0) {
    const int h = (k - 1) / 2;
    r = detail::sub(detail::mul(detail::bdiff(in, 1), detail::shifted(detail::bdiff(in, k - 1), h)),
                    detail::mul(in, detail::shifted(detail::bdiff(in, k), h)));
  } else {
    const int h = k / 2;
    r = detail::sub(
        detail::mul(detail::shifted(detail::bdiff(in, 1), 1),
                    detail::shifted(detail::bdiff(in, k - 1), h - 1)),
        detail::mul(in, detail::shifted(detail::bdiff(in, k), h)));
  }
  return detail::to_output(r, x.size());
}

/// a' DEO of order k >= 1, the parity-free variant:
///   direct       sum_{i} (-1)^i C(k-2-i, i) D_b^{(k-2-2i)}(TKEO(D_b^{(i)}(x)))
///                where terms with k-2-i < i or k-2-i < 0 vanish
///   verification the recursion Y_k = D_b(Y_{k-1}(x)) - Y_{k-2}(D_b(x))
inline OperatorOutput aprime_deo(const Signal& x, int k, Form form = Form::Direct) {
  check_operator_order(OperatorKind::APrime, k);
  const auto in = detail::from_signal(x);
  if (form == Form::Verification)
    return detail::to_output(detail::aprime_recursion(in, k), x.size());
  detail::Ranged acc;
  for (int i = 0; i <= k / 2; ++i) {
    const int a = k - 2 - i;
    if (a < i || a < 0) continue;  // binomial taken as zero; term drops out
    const double coeff = detail::sign_pow(i) * static_cast<double>(binomial(a, i));
    detail::accumulate(
        acc, detail::scaled(detail::bdiff(detail::tkeo(detail::bdiff(in, i)), k - 2 - 2 * i), coeff));
  }
  if (acc.v.empty()) return detail::to_output(detail::zeros_like(in), x.size());  // k = 1
  return detail::to_output(acc, x.size());
}

}  // namespace heo
