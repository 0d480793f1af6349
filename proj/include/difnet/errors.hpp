#pragma once

#include <stdexcept>
#include <string>

namespace difnet {

enum class ErrorCode {
  EmptyAgents,
  EmptyFeatures,
  TooManyAgents,
  TooManyFeatures,
  InvalidIdentifier,
  UnknownAgent,
  UnknownFeature,
  ThresholdOutOfRange,
  EmptySequence,
  SyntaxError,
  UnknownOperator,
  SignatureMismatch,
  BadKind,
  BadIndex,
  BudgetExceeded,
  SearchExhausted,
  InvariantViolation,
  IoError,
  ParseError,
  BadRational,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace difnet
