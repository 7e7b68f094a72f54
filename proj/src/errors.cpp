#include "bp/errors.hpp"

namespace bp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::InternalExponentMismatch: return "InternalExponentMismatch";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ZeroRecursionConstant: return "ZeroRecursionConstant";
    case ErrorCode::PoleInConstant: return "PoleInConstant";
    case ErrorCode::PoleInCoefficient: return "PoleInCoefficient";
    case ErrorCode::CoincidingCoordinates: return "CoincidingCoordinates";
    case ErrorCode::CoordinateAtSingularPoint: return "CoordinateAtSingularPoint";
    case ErrorCode::MomentPole: return "MomentPole";
    case ErrorCode::NonIntegerShift: return "NonIntegerShift";
    case ErrorCode::GammaPole: return "GammaPole";
  }
  return "UnknownError";
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bp
