#pragma once

#include <stdexcept>
#include <string>

namespace tricusp {

enum class ErrorCode {
  ZeroInverse,
  IncompatibleFields,
  CharacteristicMismatch,
  InvalidField,
  FieldMismatch,
  DivisionByZeroPoly,
  SyntaxError,
  UnknownVariable,
  PointNotInChart,
  NotZeroDimensional,
  DegenerateCoordinates,
  PositiveDimensionalSingularLocus,
  NotSingular,
  DegenerateInstance,
  ConstructionFailed,
  DegreeMismatch,
  FieldTooLarge,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tricusp
