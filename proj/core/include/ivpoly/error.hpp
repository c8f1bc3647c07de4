#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivpoly {

enum class ErrorCode {
  kZeroDenominator,
  kNonMonicDivisor,
  kBadModulus,
  kNonCoprimeModuli,
  kNonMonic,
  kDegreeZero,
  kCompositeModulus,
  kDegreeDrop,
  kBudgetExceeded,
  kInternalAssertionFailure,
  kNotIntegerValuedAtMatrix,
  kInsufficientPrecision,
  kDimensionMismatch,
  kIndexOutOfRange,
  kNonMemberGenerator,
  kNonMemberElement,
  kParseError,
};

/// Machine-readable name, e.g. "BudgetExceeded".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ivpoly
