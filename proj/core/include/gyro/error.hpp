#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyro {

enum class ErrorCode {
  InvalidArgument,
  BoundaryOrOutside,
  NumericallyAtBoundary,
  DimensionMismatch,
  ContextMismatch,
  NotParallel,
  EmptyList,
  UnknownIdentity,
  CollinearInput,
  DegenerateInput,
  WrongModel,
  StepTooLarge,
  NegativeParameter,
  ZeroWeightSum,
  NotInAffineSpan,
  DependentAnchors,
  NonpositiveGammaSum,
  SideMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

// All domain failures in the library surface as gyro::Error; code() says which
// precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gyro
