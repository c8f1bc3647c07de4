#include "ivpoly/error.hpp"

namespace ivpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kNonMonicDivisor: return "NonMonicDivisor";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kNonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::kNonMonic: return "NonMonic";
    case ErrorCode::kDegreeZero: return "DegreeZero";
    case ErrorCode::kCompositeModulus: return "CompositeModulus";
    case ErrorCode::kDegreeDrop: return "DegreeDrop";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInternalAssertionFailure: return "InternalAssertionFailure";
    case ErrorCode::kNotIntegerValuedAtMatrix: return "NotIntegerValuedAtMatrix";
    case ErrorCode::kInsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNonMemberGenerator: return "NonMemberGenerator";
    case ErrorCode::kNonMemberElement: return "NonMemberElement";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ivpoly
