#pragma once

#include <stdexcept>
#include <string>

namespace kg {

enum class ErrorCode {
  NonComposable,
  BoundsViolated,
  RangeMismatch,
  UnknownId,
  InvalidArgument,
  NotHereditary,
  WindowNotClosed,
  NoGrading,
  CapTooLarge,
  Syntax,
  Validation,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kg
