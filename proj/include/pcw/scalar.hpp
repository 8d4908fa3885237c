#pragma once

#include "pcw/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcw {

/// Element of Q(s_1, ..., s_k): a reduced fraction of polynomials whose
/// denominator is monic under graded-lex. Two scalars are equal iff their
/// representations are identical.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const mpq_class& v) : num_(v), den_(1) {}
    Scalar(const Poly& p) : num_(p), den_(1) {}
    /// Throws DivisionByZero when den is zero.
    Scalar(const Poly& num, const Poly& den);

    static Scalar symbol(std::size_t index) { return Scalar(Poly::variable(index)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    bool uses_variable(std::size_t var) const { return num_.uses_variable(var) || den_.uses_variable(var); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    bool operator==(const Scalar& other) const { return num_ == other.num_ && den_ == other.den_; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;
    Scalar partial(std::size_t var) const;

    /// Re-runs canonicalization; a no-op on any constructed value.
    Scalar canonical() const { return Scalar(num_, den_); }

    std::string to_string(const std::vector<std::string>& names) const;
    /// Like to_string, but parenthesized whenever the value is not a single factor.
    std::string to_factor_string(const std::vector<std::string>& names) const;

private:
    struct Raw {};
    Scalar(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    Poly num_;
    Poly den_;
};

enum class SymbolKind { Parameter, Function };

/// Formal 1-form with scalar coefficients, keyed by generator index.
using FormalDifferential = std::map<std::size_t, Scalar>;

/// Declared coefficient symbols and the exterior differentials of the
/// function symbols. Parameters have zero differential; a function symbol
/// without a declared differential cannot be differentiated.
class SymbolTable {
public:
    struct Symbol {
        std::string name;
        SymbolKind kind;
    };

    /// Returns the new symbol's index. Throws DuplicateDeclaration.
    std::size_t declare(const std::string& name, SymbolKind kind);
    /// Throws UndeclaredSymbol for unknown or parameter names, DuplicateDeclaration
    /// when already set.
    void set_differential(const std::string& name, FormalDifferential diff);

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t size() const { return symbols_.size(); }
    const Symbol& symbol(std::size_t i) const { return symbols_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const FormalDifferential* differential(std::size_t i) const;
    const std::map<std::size_t, FormalDifferential>& differentials() const { return diffs_; }

    bool has_functions() const;
    /// True when the scalar involves a function symbol.
    bool involves_function(const Scalar& s) const;

    bool operator==(const SymbolTable& other) const;

private:
    std::vector<Symbol> symbols_;
    std::vector<std::string> names_;
    std::map<std::size_t, FormalDifferential> diffs_;
};

/// Exterior derivative of a coefficient: sum over symbols of the partial
/// derivative times the symbol's declared differential.
/// Throws UndeclaredSymbol when a needed differential is not declared.
FormalDifferential scalar_diff(const Scalar& a, const SymbolTable& table);

}  // namespace pcw
