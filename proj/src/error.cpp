#include "pcw/error.hpp"

namespace pcw {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MixedDegree: return "MixedDegree";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::FunctionCoefficientModel: return "FunctionCoefficientModel";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SplitFailure: return "SplitFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace pcw
