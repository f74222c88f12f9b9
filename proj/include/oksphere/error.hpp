#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oksphere {

enum class ErrorCode {
  NonIncreasing,
  OutOfRange,
  MassMismatch,
  IndexOutOfRange,
  NonPositive,
  EmptyRange,
  ToleranceNotMet,
  DomainError,
  Asymptote,
  NoConvergence,
  LeftDomain,
  BranchLost,
  OrderingViolated,
  CycleLimit,
  NoEscape,
  NotCritical,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Failures from numerical routines (as opposed to invalid input).
bool is_numerical_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oksphere
