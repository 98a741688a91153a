#include "selberg/error.hpp"

namespace selberg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotTerminating: return "NotTerminating";
    case ErrorCode::SingularLowerParameter: return "SingularLowerParameter";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroDenominatorCoefficient: return "ZeroDenominatorCoefficient";
    case ErrorCode::ZeroPrefactorDenominator: return "ZeroPrefactorDenominator";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::RoleMismatch: return "RoleMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateWeights: return "DegenerateWeights";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "Unknown";
}

}  // namespace selberg
