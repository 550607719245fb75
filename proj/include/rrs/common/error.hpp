#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rrs {

enum class ErrorCode {
  PastEvent,
  EventHandler,
  NoDisaster,
  ParseError,
  ValidationError,
  UnknownNode,
  ZeroDistance,
  LengthMismatch,
  EvaluatorFailure,
  EmptyCodebook,
  TooLarge,
  UncoveredElement,
  Overlap,
  NoActiveAps,
  DimensionMismatch,
  UnreachablePlacement,
  DuplicateName,
  InvalidInterval,
  UnknownAlgorithm,
  Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace rrs
