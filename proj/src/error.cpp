#include "oksphere/error.hpp"

namespace oksphere {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonIncreasing: return "NonIncreasing";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Asymptote: return "Asymptote";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::BranchLost: return "BranchLost";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::CycleLimit: return "CycleLimit";
    case ErrorCode::NoEscape: return "NoEscape";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_numerical_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ToleranceNotMet:
    case ErrorCode::NoConvergence:
    case ErrorCode::LeftDomain:
    case ErrorCode::BranchLost:
    case ErrorCode::CycleLimit:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace oksphere
