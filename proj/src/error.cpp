#include "rfg/error.hpp"

namespace rfg {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::NotInGroup: return "NotInGroup";
  case ErrorCode::PoleAtInput: return "PoleAtInput";
  case ErrorCode::RotationCenterCase: return "RotationCenterCase";
  case ErrorCode::NoIsometricCircle: return "NoIsometricCircle";
  case ErrorCode::DegeneratePoints: return "DegeneratePoints";
  case ErrorCode::SharedEndpoint: return "SharedEndpoint";
  case ErrorCode::NotHyperbolic: return "NotHyperbolic";
  case ErrorCode::DegenerateLength: return "DegenerateLength";
  case ErrorCode::CoincidentMidpoints: return "CoincidentMidpoints";
  case ErrorCode::DomainError: return "DomainError";
  case ErrorCode::NonIntegrable: return "NonIntegrable";
  case ErrorCode::UnknownExperiment: return "UnknownExperiment";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

} // namespace rfg
