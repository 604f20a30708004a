#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xhopf {

/// Failure categories raised by the library. Axiom violations are never
/// errors; they are reported through `Report`. Errors are reserved for
/// malformed input and violated preconditions.
enum class ErrorCode {
    MixedFields,
    DivisionByZero,
    ShapeMismatch,
    NotNormal,
    NonComposable,
    NotAbelian,
    NotGrouplike,
    MissingAntipode,
    NotBicharacter,
    NotAlgebraAutomorphism,
    NotHomomorphism,
    NotPivotal,
    NotHomogeneous,
    NotInvertible,
    NotIntegral,
    DefiningIdentityFailed,
    AxiomCheckFailed,
    SyntaxError,
    ReferenceError,
    FieldMismatch,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace xhopf
