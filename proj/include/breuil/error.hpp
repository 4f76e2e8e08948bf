#pragma once

#include <stdexcept>
#include <string>

namespace breuil {

enum class ErrorCode {
  CompositeP,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  SyntaxError,
  VariableOutOfRange,
  ContextMismatch,
  NotAUnit,
  OrderUnknown,
  NoLambdaInField,
  NotNormalized,
  DimensionMismatch,
  InvalidCertificate,
  AnnihilationRefuted,
  MissingCertificate,
  IllFormedPresentation,
  BudgetExceeded,
  NoMorphism,
  NotRegularSequence,
  ShapeMismatch,
  PrecisionTooLow,
  UnsupportedDimension,
  InvalidInput,
  FormatError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::OrderUnknown: return "OrderUnknown";
    case ErrorCode::NoLambdaInField: return "NoLambdaInField";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::AnnihilationRefuted: return "AnnihilationRefuted";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::IllFormedPresentation: return "IllFormedPresentation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoMorphism: return "NoMorphism";
    case ErrorCode::NotRegularSequence: return "NotRegularSequence";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace breuil
