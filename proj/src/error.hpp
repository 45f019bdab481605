#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  ZeroPolynomial,
  Isotrivial,
  DigitBudgetExceeded,
  IncompleteFactorization,
  PostCriticallyFinite,
  PreconditionViolated,
  SingularModel,
  InvalidConstants,
  ZeroInput,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Budget failures that carry whatever was computed before the limit hit.
/// `Partial` is the natural result type of the failing operation.
template <typename Partial>
class BudgetError : public Error {
 public:
  BudgetError(ErrorCode code, const std::string& what, Partial partial)
      : Error(code, what), partial_(std::move(partial)) {}

  const Partial& partial() const noexcept { return partial_; }

 private:
  Partial partial_;
};

}  // namespace arbor
