#include "error.hpp"

namespace arbor {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::Isotrivial: return "Isotrivial";
    case ErrorCode::DigitBudgetExceeded: return "DigitBudgetExceeded";
    case ErrorCode::IncompleteFactorization: return "IncompleteFactorization";
    case ErrorCode::PostCriticallyFinite: return "PostCriticallyFinite";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SingularModel: return "SingularModel";
    case ErrorCode::InvalidConstants: return "InvalidConstants";
    case ErrorCode::ZeroInput: return "ZeroInput";
  }
  return "Unknown";
}

}  // namespace arbor
