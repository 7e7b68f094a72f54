#pragma once
/**
 * @file errors.hpp
 * @brief Shared error taxonomy: one exception type carrying a machine-readable
 *        code alongside the human-readable message.
 */

#include <stdexcept>
#include <string>

namespace bp {

/// Machine-readable failure classes surfaced by the library.
enum class ErrorCode {
  InvalidInput,              ///< malformed argument not covered by a case below
  DivisionByZero,            ///< rational division or inversion of zero
  NotPolynomial,             ///< generalized form does not normalize to a polynomial
  IndexOutOfRange,           ///< ladder-operator index outside its legal range
  Inconsistent,              ///< parameter triple violates the consistency inequalities
  InternalExponentMismatch,  ///< constructed space contradicts its own exponent data
  NonExactDivision,          ///< divided Wronskian left a nonzero remainder
  NotInSpace,                ///< pairing operand is outside the span of the space
  UnsupportedRank,           ///< closed-form differential operator requested for r > 2
  NotAdmissible,             ///< a leading coefficient vanished; normalization impossible
  ZeroRecursionConstant,     ///< a ladder chain hit a vanishing proportionality constant
  PoleInConstant,            ///< proportionality-constant denominator vanished
  PoleInCoefficient,         ///< explicit coefficient formula hit a vanishing denominator
  CoincidingCoordinates,     ///< two coordinates of a point coincide
  CoordinateAtSingularPoint, ///< a coordinate sits on a singular locus (0, or 1 on level one)
  MomentPole,                ///< moment recurrence crossed a zero denominator
  NonIntegerShift,           ///< ratio of beta values requested across a non-integer shift
  GammaPole,                 ///< gamma functional-equation ladder crossed a pole
};

/// Stable identifier string for an error code (used in CLI/JSON output).
const char* error_code_name(ErrorCode code) noexcept;

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throw an Error with the given code and message.
[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace bp
