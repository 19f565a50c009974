#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kb {

enum class ErrorCode {
  Empty,
  NotSimple,
  NotConnected,
  InvalidSize,
  NotBipartite,
  DimensionMismatch,
  TooManyRays,
  PointInSet,
  ParameterError,
  NotLipschitzInput,
  NotAViolation,
  IncompleteAssignment,
  NotHomomorphism,
  ParityMismatch,
  TooLarge,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type;
/// `code()` identifies which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kb
