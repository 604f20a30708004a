#include "xhopf/error.hpp"

namespace xhopf {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotGrouplike: return "NotGrouplike";
    case ErrorCode::MissingAntipode: return "MissingAntipode";
    case ErrorCode::NotBicharacter: return "NotBicharacter";
    case ErrorCode::NotAlgebraAutomorphism: return "NotAlgebraAutomorphism";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotPivotal: return "NotPivotal";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::DefiningIdentityFailed: return "DefiningIdentityFailed";
    case ErrorCode::AxiomCheckFailed: return "AxiomCheckFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ReferenceError: return "ReferenceError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace xhopf
