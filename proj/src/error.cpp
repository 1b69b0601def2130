#include "aoc/error.hpp"

namespace aoc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonNegativeLink: return "NonNegativeLink";
    case ErrorCode::PointOutsideModel: return "PointOutsideModel";
    case ErrorCode::PointOnCurve: return "PointOnCurve";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotCCW: return "NotCCW";
    case ErrorCode::MissingInvariant: return "MissingInvariant";
    case ErrorCode::WrongModel: return "WrongModel";
    case ErrorCode::WrongLozengeType: return "WrongLozengeType";
    case ErrorCode::PointNotInLozenge: return "PointNotInLozenge";
    case ErrorCode::InvalidDeckCount: return "InvalidDeckCount";
    case ErrorCode::UnknownSingularity: return "UnknownSingularity";
    case ErrorCode::NonIncreasingUPositions: return "NonIncreasingUPositions";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingLambdaHint: return "MissingLambdaHint";
    case ErrorCode::InvalidSection: return "InvalidSection";
    case ErrorCode::SignHypothesisUnmet: return "SignHypothesisUnmet";
    case ErrorCode::OrbitNotShared: return "OrbitNotShared";
    case ErrorCode::InconsistentData: return "InconsistentData";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::ParseError,
            message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

}  // namespace aoc
