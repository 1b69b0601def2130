#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aoc {

enum class ErrorCode {
  InvalidArgument,
  Overflow,
  NonNegativeLink,
  PointOutsideModel,
  PointOnCurve,
  NotSimple,
  NotCCW,
  MissingInvariant,
  WrongModel,
  WrongLozengeType,
  PointNotInLozenge,
  InvalidDeckCount,
  UnknownSingularity,
  NonIncreasingUPositions,
  PreconditionViolated,
  LengthMismatch,
  MissingLambdaHint,
  InvalidSection,
  SignHypothesisUnmet,
  OrbitNotShared,
  InconsistentData,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to a structured report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace aoc
