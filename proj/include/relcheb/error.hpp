#pragma once

#include <stdexcept>
#include <string>

namespace relcheb {

enum class ErrorCode {
  TooFewVertices,
  DuplicateVertex,
  NotConvex,
  NonFinite,
  IndexOutOfRange,
  ParameterOutOfRange,
  PointNotOnBoundary,
  DegenerateTriangle,
  NOutOfRange,
  NonPositiveRadius,
  BoundNotApplicable,
  NoFeasibleStart,
  BadInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relcheb
