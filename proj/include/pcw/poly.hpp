#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcw {

/// Exponent vector of a monomial. Trailing zero exponents are trimmed so that
/// equal monomials have identical representations.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t var, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t var) const { return var < exps_.size() ? exps_[var] : 0; }
    std::size_t num_vars() const { return exps_.size(); }
    std::uint32_t total_degree() const;
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// Requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    Monomial with_exponent(std::size_t var, std::uint32_t e) const;
    Monomial gcd(const Monomial& other) const;

    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool operator==(const Monomial& other) const = default;

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order, variable 0 most significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept in
/// decreasing graded-lex order, so the first term is the leading term.
class Poly {
public:
    using TermMap = std::map<Monomial, mpq_class, GrlexGreater>;

    Poly() = default;
    Poly(const mpq_class& c);
    Poly(long c) : Poly(mpq_class(c)) {}
    Poly(const Monomial& m, const mpq_class& c);

    static Poly variable(std::size_t var);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term value; meaningful when is_constant().
    mpq_class constant_value() const;

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const mpq_class& leading_coefficient() const { return terms_.begin()->second; }
    const TermMap& terms() const { return terms_; }

    std::uint32_t degree_in(std::size_t var) const;
    std::uint32_t total_degree() const;
    /// One past the largest variable index with nonzero exponent.
    std::size_t num_vars() const;
    bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t var) const;

    /// Exact quotient, or nullopt when `divisor` does not divide this polynomial.
    std::optional<Poly> exact_div(const Poly& divisor) const;

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    Poly monic() const;

    /// Coefficient of var^k, as a polynomial with var eliminated.
    Poly coefficient_in(std::size_t var, std::uint32_t k) const;

    /// Componentwise minimum of the exponents of all terms.
    Monomial monomial_content() const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const Monomial& m, const mpq_class& c);
    TermMap terms_;
};

/// Monic greatest common divisor over Q[x_0, x_1, ...]; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace pcw
