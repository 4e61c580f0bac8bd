#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamesign {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  UnsupportedField,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  NotAGenerator,
  RankOutOfRange,
  ArityMismatch,
  VariableUsed,
  SingularMatrix,
  ZeroDiagonal,
  TailUsesEarlyVariable,
  NotBijective,
  BudgetExceeded,
  SizeMismatch,
  ArityTooSmall,
  NotStrict,
  Overflow,
  SyntaxError,
  UnknownVariable,
  CoefficientOutOfField,
  NotFormulaEligible,
  ClosureTooLarge,
  Usage,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception; kind() is the
// stable discriminator, what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tamesign
