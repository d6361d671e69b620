#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuchsian {

enum class ErrorCode {
  Overflow,
  InvalidArgument,
  NotAUnitMultiple,
  UnsupportedField,
  NormMismatch,
  DegeneratePoint,
  IdentityMatrix,
  EmptyDomain,
  MaxStepsExceeded,
  SignUndecidable,
  UnknownGenerator,
  NotInImage,
  NotInOrderPattern,
  TauNotInterior,
  CollidingPoints,
  UnknownLabel,
  RealAxisSignal,
  ReductionFailed,
  EmptyConstellation,
  UnsupportedSize,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fuchsian
