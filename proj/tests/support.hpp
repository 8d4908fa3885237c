#pragma once

#include "pcw/model.hpp"
#include "pcw/operators.hpp"
#include "pcw/parse.hpp"

#include <random>
#include <string_view>

namespace pcw::test {

inline Form F(const ManifoldModel& m, std::string_view text) { return parse_form(text, m); }
inline Form F(const Geometry& g, std::string_view text) { return parse_form(text, g.model()); }
inline Scalar S(const ManifoldModel& m, std::string_view text) { return parse_scalar(text, scope_of(m)); }

// Value of a polynomial at a rational point; an oracle that never touches
// the GCD or canonicalization code.
inline mpq_class eval(const Poly& p, const std::vector<mpq_class>& at)
{
    mpq_class total = 0;
    for (const auto& [mono, c] : p.terms()) {
        mpq_class t = c;
        for (std::size_t v = 0; v < mono.num_vars(); ++v)
            for (std::uint32_t e = 0; e < mono.exponent(v); ++e)
                t *= at.at(v);
        total += t;
    }
    return total;
}

inline mpq_class eval(const Scalar& s, const std::vector<mpq_class>& at)
{
    return eval(s.numerator(), at) / eval(s.denominator(), at);
}

// Small random polynomial in `vars` variables.
inline Poly random_poly(std::mt19937& rng, std::size_t vars, int terms = 3, int max_deg = 2)
{
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, max_deg);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(vars);
        for (auto& x : e)
            x = static_cast<std::uint32_t>(deg(rng));
        p += Poly(Monomial(e), mpq_class(coeff(rng)));
    }
    return p;
}

inline Poly random_nonzero_poly(std::mt19937& rng, std::size_t vars, int terms = 3, int max_deg = 2)
{
    for (;;) {
        Poly p = random_poly(rng, vars, terms, max_deg);
        if (!p.is_zero())
            return p;
    }
}

// Random homogeneous form with small integer coefficients.
inline Form random_form(std::mt19937& rng, const GradedBasis& basis, int k)
{
    std::uniform_int_distribution<int> coeff(-2, 2);
    Form f(basis.dimension());
    for (Mask m : basis.degree(k))
        f.add_term(m, Scalar(coeff(rng)));
    return f;
}

}  // namespace pcw::test
