#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heo {

/// Real-valued sample sequence, indexed from 0.
using Signal = std::vector<double>;

/// Hard cap on the operator order k; larger |k| is rejected.
inline constexpr int kMaxOrder = 32;

/// Hard cap on the difference order m. binomial(60, j) is the largest
/// binomial row that is still exact in 64-bit integers.
inline constexpr int kMaxDiffOrder = 60;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operator or difference order outside the admissible range.
class OrderOutOfRange : public Error {
public:
  using Error::Error;
};

/// Input signal shorter than the operator window requires.
class SignalTooShort : public Error {
public:
  using Error::Error;
};

/// Parameter value or kind/order combination violating a contract.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (CSV or config). `line` is 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// The eight discrete energy operators.
enum class OperatorKind {
  Ordinary,
  Backward,
  Symmetric,
  Alternative,
  APrime,
  PdeoOrdinary,
  PdeoBackward,
  PdeoSymmetric,
};

inline constexpr OperatorKind kAllOperatorKinds[] = {
    OperatorKind::Ordinary,     OperatorKind::Backward,
    OperatorKind::Symmetric,    OperatorKind::Alternative,
    OperatorKind::APrime,       OperatorKind::PdeoOrdinary,
    OperatorKind::PdeoBackward, OperatorKind::PdeoSymmetric,
};

constexpr std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Ordinary: return "ordinary";
    case OperatorKind::Backward: return "backward";
    case OperatorKind::Symmetric: return "symmetric";
    case OperatorKind::Alternative: return "alternative";
    case OperatorKind::APrime: return "aprime";
    case OperatorKind::PdeoOrdinary: return "pdeo-ordinary";
    case OperatorKind::PdeoBackward: return "pdeo-backward";
    case OperatorKind::PdeoSymmetric: return "pdeo-symmetric";
  }
  return "?";
}

inline OperatorKind parse_operator_kind(std::string_view name) {
  for (OperatorKind kind : kAllOperatorKinds)
    if (to_string(kind) == name) return kind;
  throw InvalidArgument("unknown operator kind '" + std::string(name) + "'");
}

constexpr bool is_pdeo(OperatorKind kind) {
  return kind == OperatorKind::PdeoOrdinary ||
         kind == OperatorKind::PdeoBackward ||
         kind == OperatorKind::PdeoSymmetric;
}

/// Selects between the two published evaluation routes of an operator.
/// Direct is the defining formula; Verification is the equivalent expansion
/// or recursion, kept as an independent code path for cross-checking.
enum class Form { Direct, Verification };

/// Operator output. `samples` has the same length as the input signal, but
/// only indices in [first, last] are defined; edge samples where the operator
/// window falls outside the input are quiet NaN. Consumers combining outputs
/// must intersect valid ranges.
struct OperatorOutput {
  std::vector<double> samples;
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t count() const { return last - first + 1; }

  std::span<const double> valid() const {
    return std::span<const double>(samples).subspan(first, count());
  }
};

/// Validates k against the domain of the given operator kind. The ordinary
/// DEO accepts any |k| <= kMaxOrder including zero and negative orders; every
/// other kind requires k >= 1.
inline void check_operator_order(OperatorKind kind, int k) {
  if (k < -kMaxOrder || k > kMaxOrder)
    throw OrderOutOfRange("order k=" + std::to_string(k) +
                          " outside |k| <= " + std::to_string(kMaxOrder));
  if (kind != OperatorKind::Ordinary && k < 1)
    throw OrderOutOfRange(std::string(to_string(kind)) +
                          " requires k >= 1, got k=" + std::to_string(k));
}

}  // namespace heo
