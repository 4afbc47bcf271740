#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spanlab {

enum class ErrorCode {
  NotStrictlyIncreasing,
  NegativeEntry,
  TooShort,
  NonPositiveFactor,
  Overflow,
  GcdNotOne,
  EmptyGenerators,
  LengthMismatch,
  PreconditionViolated,
  TruncationMismatch,
  DegenerateWithinTruncation,
  TruncationTooSmall,
  NotLinearOnRange,
  HypothesisFailed,
  AssertionFailed,
  UnknownSuite,
  SuiteFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. Every failure the library
/// reports to callers goes through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spanlab
