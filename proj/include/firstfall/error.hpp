#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace firstfall {

enum class ErrorKind {
  ZeroInverse,
  NotPrime,
  DimensionMismatch,
  ZeroPolynomial,
  BoundTooLarge,
  ArityError,
  NonHomogeneousSystem,
  MixedDegrees,
  EvenCharacteristic,
  SingularSample,
  SigningFailure,
  ShapeMismatch,
  OmegaOutOfRange,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace firstfall
