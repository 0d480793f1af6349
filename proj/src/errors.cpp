#include "difnet/errors.hpp"

namespace difnet {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyAgents: return "EmptyAgents";
    case ErrorCode::EmptyFeatures: return "EmptyFeatures";
    case ErrorCode::TooManyAgents: return "TooManyAgents";
    case ErrorCode::TooManyFeatures: return "TooManyFeatures";
    case ErrorCode::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::UnknownAgent: return "UnknownAgent";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownOperator: return "UnknownOperator";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::BadKind: return "BadKind";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadRational: return "BadRational";
  }
  return "UnknownError";
}

}  // namespace difnet
