#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mink {

enum class ErrorCode {
  NullVector,
  NonFinite,
  DomainExceeded,
  InsufficientSamples,
  DegenerateCurvature,
  NullTangent,
  LightlikeDarboux,
  ClassMismatch,
  DegenerateMate,
  NotSpacelikeMate,
  NotBertrand,
  NonConstantAngle,
  MembershipViolation,
  StationaryPoint,
  OffSurface,
  NonTangentVelocity,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Parse/validation problems are the caller's fault; the rest are math or IO.
inline bool is_input_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::ValidationError;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Same error with an extra "where" prefix, e.g. "frenet_apparatus(alpha) at s=0.5".
  Error with_context(const std::string& where) const {
    Error e(code_, where + ": " + detail());
    return e;
  }

  /// Message without the leading code name.
  std::string detail() const {
    std::string m = what();
    auto prefix = std::string(to_string(code_)) + ": ";
    return m.rfind(prefix, 0) == 0 ? m.substr(prefix.size()) : m;
  }

 private:
  ErrorCode code_;
};

}  // namespace mink
