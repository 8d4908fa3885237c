#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcw {

enum class ErrorKind {
    DivisionByZero,
    UndeclaredSymbol,
    DimensionMismatch,
    MixedDegree,
    WrongDegree,
    DegreeTooHigh,
    NotPrimitive,
    UnknownBuiltin,
    FunctionCoefficientModel,
    AmbientMismatch,
    SplitFailure,
    ParseError,
    DuplicateDeclaration,
    UnknownGenerator,
    DimensionTooLarge,
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Manifest or expression syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& msg, int line, int column)
        : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace pcw
