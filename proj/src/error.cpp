#include "tricusp/error.hpp"

namespace tricusp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::IncompatibleFields: return "IncompatibleFields";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::PointNotInChart: return "PointNotInChart";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::DegenerateCoordinates: return "DegenerateCoordinates";
    case ErrorCode::PositiveDimensionalSingularLocus: return "PositiveDimensionalSingularLocus";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tricusp
