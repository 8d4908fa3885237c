#pragma once

#include "pcw/forms.hpp"
#include "pcw/model.hpp"
#include "pcw/scalar.hpp"

#include <string>
#include <string_view>

namespace pcw {

/// Names visible to an expression: generators become 1-forms, symbols become scalars.
struct ExpressionScope {
    int dim = 0;
    const std::vector<std::string>* generators = nullptr;
    const SymbolTable* symbols = nullptr;
};

inline ExpressionScope scope_of(const ManifoldModel& m) { return {m.dim, &m.generators, &m.symbols}; }

/// Form expression: `+ -` below `* / ^` (left-associative, one level), then
/// unary minus, then `**` with an integer exponent. `*` needs a degree-0
/// operand, `/` a degree-0 nonzero divisor, `**` a degree-0 base.
/// Errors are ParseError with kind ParseError or UnknownGenerator; columns
/// count from `column`.
Form parse_form(std::string_view text, const ExpressionScope& scope, int line = 1, int column = 1);
inline Form parse_form(std::string_view text, const ManifoldModel& m) { return parse_form(text, scope_of(m)); }

/// A degree-0 expression.
Scalar parse_scalar(std::string_view text, const ExpressionScope& scope, int line = 1, int column = 1);

/// Line-oriented manifest. Throws ParseError (kinds ParseError,
/// DuplicateDeclaration, UnknownGenerator).
ManifoldModel parse_manifest(std::string_view text);
/// Inverse of parse_manifest: parse_manifest(serialize_manifest(m)) == m.
std::string serialize_manifest(const ManifoldModel& m);

}  // namespace pcw
