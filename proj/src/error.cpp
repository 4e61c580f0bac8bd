#include "tamesign/error.hpp"

namespace tamesign {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::VariableUsed: return "VariableUsed";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorKind::TailUsesEarlyVariable: return "TailUsesEarlyVariable";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ArityTooSmall: return "ArityTooSmall";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::CoefficientOutOfField: return "CoefficientOutOfField";
    case ErrorKind::NotFormulaEligible: return "NotFormulaEligible";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace tamesign
