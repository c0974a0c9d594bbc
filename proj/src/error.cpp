#include "mink/error.hpp"

namespace mink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullVector: return "NullVector";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::DegenerateCurvature: return "DegenerateCurvature";
    case ErrorCode::NullTangent: return "NullTangent";
    case ErrorCode::LightlikeDarboux: return "LightlikeDarboux";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::DegenerateMate: return "DegenerateMate";
    case ErrorCode::NotSpacelikeMate: return "NotSpacelikeMate";
    case ErrorCode::NotBertrand: return "NotBertrand";
    case ErrorCode::NonConstantAngle: return "NonConstantAngle";
    case ErrorCode::MembershipViolation: return "MembershipViolation";
    case ErrorCode::StationaryPoint: return "StationaryPoint";
    case ErrorCode::OffSurface: return "OffSurface";
    case ErrorCode::NonTangentVelocity: return "NonTangentVelocity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mink
