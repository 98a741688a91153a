#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selberg {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  DivisionByZero,
  NotTerminating,
  SingularLowerParameter,
  ZeroDenominator,
  ZeroDenominatorCoefficient,
  ZeroPrefactorDenominator,
  ZeroArgument,
  NotBalanced,
  RoleMismatch,
  TooLarge,
  DegenerateWeights,
  InvalidSchedule,
  PrecisionExhausted,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace selberg
