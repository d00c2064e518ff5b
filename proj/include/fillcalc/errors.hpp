#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fillcalc {

/// Machine-readable classification of rejected input.
enum class ErrorCode {
  Syntax,
  Schema,
  BudgetMismatch,
  NoncanonicalFraming,
  NotCoprime,
  OutOfRange,
  EulerBound,
  WrongShape,
  Precondition,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::Schema: return "SCHEMA";
    case ErrorCode::BudgetMismatch: return "BUDGET_MISMATCH";
    case ErrorCode::NoncanonicalFraming: return "NONCANONICAL_FRAMING";
    case ErrorCode::NotCoprime: return "NOT_COPRIME";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::EulerBound: return "EULER_BOUND";
    case ErrorCode::WrongShape: return "WRONG_SHAPE";
    case ErrorCode::Precondition: return "PRECONDITION";
  }
  return "UNKNOWN";
}

/// Thrown for inputs that violate a documented precondition.
class InputError : public std::invalid_argument {
 public:
  InputError(ErrorCode code, const std::string& where, const std::string& what)
      : std::invalid_argument(format(code, where, what)), code_(code), where_(where) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& where() const noexcept { return where_; }

 private:
  static std::string format(ErrorCode code, const std::string& where, const std::string& what) {
    std::string out(to_string(code));
    if (!where.empty()) out += " at " + where;
    out += ": " + what;
    return out;
  }

  ErrorCode code_;
  std::string where_;
};

/// Thrown when an internal consistency check fails. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_internal(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace fillcalc
