#include "rrs/common/error.hpp"

namespace rrs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PastEvent: return "PastEvent";
    case ErrorCode::EventHandler: return "EventHandler";
    case ErrorCode::NoDisaster: return "NoDisaster";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::ZeroDistance: return "ZeroDistance";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EvaluatorFailure: return "EvaluatorFailure";
    case ErrorCode::EmptyCodebook: return "EmptyCodebook";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UncoveredElement: return "UncoveredElement";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::NoActiveAps: return "NoActiveAps";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnreachablePlacement: return "UnreachablePlacement";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace rrs
