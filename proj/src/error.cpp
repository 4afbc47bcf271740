#include "spanlab/error.hpp"

namespace spanlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NonPositiveFactor: return "NonPositiveFactor";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::DegenerateWithinTruncation: return "DegenerateWithinTruncation";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NotLinearOnRange: return "NotLinearOnRange";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::SuiteFailed: return "SuiteFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace spanlab
