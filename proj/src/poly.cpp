#include "pcw/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcw {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { trim(); }

void Monomial::trim()
{
    while (!exps_.empty() && exps_.back() == 0)
        exps_.pop_back();
}

Monomial Monomial::variable(std::size_t var, std::uint32_t power)
{
    std::vector<std::uint32_t> e(var + 1, 0);
    e[var] = power;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::total_degree() const
{
    std::uint32_t s = 0;
    for (auto e : exps_)
        s += e;
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exponent(i) + other.exponent(i);
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const
{
    if (exps_.size() > other.exps_.size())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    std::vector<std::uint32_t> e(other.exps_);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] -= exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t var, std::uint32_t e) const
{
    std::vector<std::uint32_t> v(exps_);
    if (v.size() <= var)
        v.resize(var + 1, 0);
    v[var] = e;
    return Monomial(std::move(v));
}

Monomial Monomial::gcd(const Monomial& other) const
{
    std::vector<std::uint32_t> e(std::min(exps_.size(), other.exps_.size()));
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b)
{
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    std::size_t n = std::max(a.num_vars(), b.num_vars());
    for (std::size_t i = 0; i < n; ++i) {
        auto ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb)
            return ea < eb;
    }
    return false;
}

Poly::Poly(const mpq_class& c)
{
    if (c != 0)
        terms_.emplace(Monomial(), c);
}

Poly::Poly(const Monomial& m, const mpq_class& c)
{
    if (c != 0)
        terms_.emplace(m, c);
}

Poly Poly::variable(std::size_t var) { return Poly(Monomial::variable(var), mpq_class(1)); }

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

mpq_class Poly::constant_value() const
{
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::uint32_t Poly::degree_in(std::size_t var) const
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.exponent(var));
    return d;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.total_degree(); }

std::size_t Poly::num_vars() const
{
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
        n = std::max(n, m.num_vars());
    return n;
}

void Poly::add_term(const Monomial& m, const mpq_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const mpq_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly result(1), base(*this);
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        auto e = m.exponent(var);
        if (e == 0)
            continue;
        r.add_term(m.with_exponent(var, e - 1), c * e);
    }
    return r;
}

std::optional<Poly> Poly::exact_div(const Poly& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    Poly rem(*this), quot;
    const auto& lm = divisor.leading_monomial();
    const auto& lc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const auto& rm = rem.leading_monomial();
        if (!lm.divides(rm))
            return std::nullopt;
        Poly t(lm.quotient_of(rm), rem.leading_coefficient() / lc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    Poly r(*this);
    r *= mpq_class(1) / leading_coefficient();
    return r;
}

Poly Poly::coefficient_in(std::size_t var, std::uint32_t k) const
{
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) == k)
            r.add_term(m.with_exponent(var, 0), c);
    return r;
}

Monomial Poly::monomial_content() const
{
    if (terms_.empty())
        return Monomial();
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        g = g.gcd(m);
    return g;
}

namespace {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        auto e = m.exponent(i);
        if (e == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (e > 1)
            s += "**" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string Poly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (m.is_one()) {
            out << mag.get_str();
        } else {
            if (mag != 1)
                out << mag.get_str() << '*';
            out << monomial_string(m, names);
        }
    }
    return out.str();
}

namespace {

std::size_t smallest_variable(const Poly& p)
{
    std::size_t best = SIZE_MAX;
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < m.num_vars() && i < best; ++i)
            if (m.exponent(i) > 0) {
                best = i;
                break;
            }
    return best;
}

Poly divide_exactly(const Poly& a, const Poly& b)
{
    auto q = a.exact_div(b);
    if (!q)
        throw std::logic_error("polynomial gcd: inexact division");
    return *q;
}

std::vector<bool> variables_of(const Poly& p)
{
    std::vector<bool> used;
    for (const auto& [m, c] : p.terms()) {
        if (used.size() < m.num_vars())
            used.resize(m.num_vars(), false);
        for (std::size_t i = 0; i < m.num_vars(); ++i)
            if (m.exponent(i) > 0)
                used[i] = true;
    }
    return used;
}

// Coefficients of p as a polynomial in the variables outside `keep`.
std::vector<Poly> coefficients_outside(const Poly& p, const std::vector<bool>& keep)
{
    std::map<Monomial, Poly, GrlexGreater> groups;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> inside(m.num_vars(), 0), outside(m.num_vars(), 0);
        for (std::size_t i = 0; i < m.num_vars(); ++i)
            (i < keep.size() && keep[i] ? inside : outside)[i] = m.exponent(i);
        groups[Monomial(outside)] += Poly(Monomial(inside), c);
    }
    std::vector<Poly> out;
    for (auto& [m, c] : groups)
        out.push_back(std::move(c));
    return out;
}

bool has_foreign_variable(const std::vector<bool>& a, const std::vector<bool>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && (i >= b.size() || !b[i]))
            return true;
    return false;
}

// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var)
{
    Poly g;
    for (std::uint32_t k = 0, d = p.degree_in(var); k <= d; ++k) {
        Poly c = p.coefficient_in(var, k);
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

Poly primitive_part_in(const Poly& p, std::size_t var) { return divide_exactly(p, content_in(p, var)); }

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var)
{
    auto db = b.degree_in(var);
    Poly lcb = b.coefficient_in(var, db);
    Poly r(a);
    auto da = a.degree_in(var);
    unsigned steps = 0;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        auto dr = r.degree_in(var);
        Poly t = r.coefficient_in(var, dr) * Poly(Monomial::variable(var, dr - db), mpq_class(1));
        r = lcb * r - t * b;
        ++steps;
    }
    unsigned expected = da - db + 1;
    if (steps < expected)
        r = r * lcb.pow(expected - steps);
    return r;
}

// p with every variable except `keep` replaced by values[i].
Poly substitute_except(const Poly& p, std::size_t keep, const std::vector<mpq_class>& values)
{
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        mpq_class t = c;
        for (std::size_t i = 0; i < m.num_vars(); ++i) {
            if (i == keep)
                continue;
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), values[i].get_num_mpz_t(), m.exponent(i));
            mpz_pow_ui(den.get_mpz_t(), values[i].get_den_mpz_t(), m.exponent(i));
            t *= mpq_class(num, den);
        }
        out += Poly(Monomial::variable(keep, m.exponent(keep)), t);
    }
    return out;
}

// Degree of the monic gcd of two polynomials in the single variable `var`.
std::uint32_t univariate_gcd_degree(Poly a, Poly b, std::size_t var)
{
    while (!b.is_zero()) {
        auto db = b.degree_in(var);
        mpq_class lcb = b.coefficient_in(var, db).constant_value();
        while (!a.is_zero() && a.degree_in(var) >= db) {
            auto da = a.degree_in(var);
            mpq_class f = a.coefficient_in(var, da).constant_value() / lcb;
            a -= Poly(Monomial::variable(var, da - db), f) * b;
        }
        std::swap(a, b);
        b = b.monic();
    }
    return a.degree_in(var);
}

// Upper bound on deg_var gcd(a, b) from an image at a fixed point, or
// nullopt when every tried point kills a leading coefficient.
std::optional<std::uint32_t> gcd_degree_bound(const Poly& a, const Poly& b, std::size_t var, std::size_t nvars)
{
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    Poly la = a.coefficient_in(var, a.degree_in(var)), lb = b.coefficient_in(var, b.degree_in(var));
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<mpq_class> at(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            at[i] = mpq_class(primes[(i + 5 * attempt) % 12], 2 + attempt);
        Poly ia = substitute_except(la, var, at), ib = substitute_except(lb, var, at);
        if (ia.is_zero() || ib.is_zero())
            continue;
        return univariate_gcd_degree(substitute_except(a, var, at), substitute_except(b, var, at), var);
    }
    return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(1);
    if (a.is_monomial())
        return Poly(a.leading_monomial().gcd(b.monomial_content()), mpq_class(1));
    if (b.is_monomial())
        return Poly(b.leading_monomial().gcd(a.monomial_content()), mpq_class(1));

    // Divisors of b only involve b's variables, so any variable that only a
    // uses can be split off: gcd(a, b) = gcd(b, coefficients of a in it).
    auto va = variables_of(a), vb = variables_of(b);
    for (int side = 0; side < 2; ++side) {
        const Poly& x = side ? b : a;
        const Poly& y = side ? a : b;
        if (has_foreign_variable(side ? vb : va, side ? va : vb)) {
            Poly g = y;
            for (const Poly& c : coefficients_outside(x, side ? va : vb)) {
                g = gcd(g, c);
                if (g.is_constant())
                    break;
            }
            return g.monic();
        }
    }

    // A zero degree bound in some variable means the gcd does not involve it,
    // so it is the gcd of the coefficients in that variable.
    std::size_t nvars = std::max(a.num_vars(), b.num_vars());
    for (std::size_t v = 0; v < nvars; ++v) {
        if (!a.uses_variable(v) || !b.uses_variable(v))
            continue;
        if (gcd_degree_bound(a, b, v, nvars) == std::uint32_t(0))
            return gcd(content_in(a, v), content_in(b, v));
    }

    std::size_t var = std::min(smallest_variable(a), smallest_variable(b));
    if (!a.uses_variable(var))
        return gcd(a, content_in(b, var));
    if (!b.uses_variable(var))
        return gcd(content_in(a, var), b);

    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly cont = gcd(ca, cb);
    Poly p = divide_exactly(a, ca).monic(), q = divide_exactly(b, cb).monic();
    if (p.degree_in(var) < q.degree_in(var))
        std::swap(p, q);
    while (true) {
        Poly r = pseudo_remainder(p, q, var);
        if (r.is_zero())
            break;
        if (!r.uses_variable(var)) {
            q = Poly(1);
            break;
        }
        p = std::move(q);
        q = primitive_part_in(r, var).monic();
    }
    return (cont * primitive_part_in(q, var)).monic();
}

}  // namespace pcw
