#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rfg {

// Numeric values are shared with rfg_status in rfg.h.
enum class ErrorCode : int {
  NotInGroup = 1,
  PoleAtInput = 2,
  RotationCenterCase = 3,
  NoIsometricCircle = 4,
  DegeneratePoints = 5,
  SharedEndpoint = 6,
  NotHyperbolic = 7,
  DegenerateLength = 8,
  CoincidentMidpoints = 9,
  DomainError = 10,
  NonIntegrable = 11,
  UnknownExperiment = 12,
  InvalidArgument = 13,
  ParseError = 14,
  Internal = 15,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace rfg
