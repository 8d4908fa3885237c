#include "pcw/forms.hpp"

#include "pcw/error.hpp"

#include <algorithm>

namespace pcw {

std::vector<int> mask_indices(Mask m)
{
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctz(m));
        m &= m - 1;
    }
    return out;
}

int merge_sign(Mask a, Mask b)
{
    if (a & b)
        return 0;
    // Count pairs (i in a, j in b) with i > j: each needs one transposition.
    int inversions = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        int j = __builtin_ctz(rest);
        Mask above = j >= 31 ? 0 : ~((Mask(1) << (j + 1)) - 1);
        inversions += popcount(a & above);
    }
    return inversions % 2 ? -1 : 1;
}

bool basis_less(Mask a, Mask b)
{
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb)
        return pa < pb;
    while (a && b) {
        int la = __builtin_ctz(a), lb = __builtin_ctz(b);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

GradedBasis::GradedBasis(int dim) : dim_(dim), by_degree_(dim + 1), index_(std::size_t(1) << dim, 0)
{
    for (Mask m = 0; m < (Mask(1) << dim); ++m)
        by_degree_[popcount(m)].push_back(m);
    for (auto& list : by_degree_) {
        std::sort(list.begin(), list.end(), basis_less);
        for (std::size_t i = 0; i < list.size(); ++i)
            index_[list[i]] = i;
    }
}

Form Form::constant(int dim, const Scalar& s)
{
    Form f(dim);
    f.add_term(0, s);
    return f;
}

Form Form::generator(int dim, int i) { return monomial(dim, Mask(1) << i); }

Form Form::monomial(int dim, Mask m, const Scalar& c)
{
    Form f(dim);
    f.add_term(m, c);
    return f;
}

Scalar Form::coefficient(Mask m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> Form::degree() const
{
    if (terms_.empty())
        return 0;
    int d = popcount(terms_.begin()->first);
    if (popcount(terms_.rbegin()->first) != d)
        return std::nullopt;
    return d;
}

int Form::require_degree() const
{
    auto d = degree();
    if (!d)
        throw Error(ErrorKind::MixedDegree, "operation requires a homogeneous form");
    return *d;
}

void Form::add_term(Mask m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Form::check_dim(const Form& other) const
{
    if (dim_ != other.dim_)
        throw Error(ErrorKind::DimensionMismatch, "forms on " + std::to_string(dim_) + " and " +
                                                      std::to_string(other.dim_) + " generators");
}

Form Form::operator-() const
{
    Form r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Form& Form::operator+=(const Form& other)
{
    check_dim(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& other)
{
    check_dim(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

namespace {

std::string mask_string(Mask m, const std::vector<std::string>& generators)
{
    std::string s;
    for (int i : mask_indices(m)) {
        if (!s.empty())
            s += '^';
        s += generators.at(i);
    }
    return s;
}

}  // namespace

std::string Form::to_string(const std::vector<std::string>& generators, const std::vector<std::string>& symbols) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool negative = c.numerator().is_monomial() && c.numerator().leading_coefficient() < 0;
        Scalar mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m == 0) {
            out += out.size() > 1 ? mag.to_factor_string(symbols) : mag.to_string(symbols);
            continue;
        }
        if (!mag.is_one())
            out += mag.to_factor_string(symbols) + "*";
        out += mask_string(m, generators);
    }
    return out;
}

Form wedge(const Form& a, const Form& b)
{
    if (a.dimension() != b.dimension())
        throw Error(ErrorKind::DimensionMismatch, "wedge of forms on different generator sets");
    Form r(a.dimension());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = merge_sign(ma, mb);
            if (s == 0)
                continue;
            Scalar c = ca * cb;
            r.add_term(ma | mb, s > 0 ? c : -c);
        }
    return r;
}

Form lefschetz(const Form& a, const Form& omega, int r)
{
    if (r < 0)
        throw Error(ErrorKind::WrongDegree, "negative Lefschetz power");
    Form acc = a;
    for (int i = 1; i <= r; ++i)
        acc = wedge(omega, acc) * Scalar(mpq_class(1, i));
    return acc;
}

bool is_primitive(const Form& a, const Form& omega)
{
    int k = a.require_degree();
    int n = a.dimension() / 2;
    if (k > n)
        throw Error(ErrorKind::DegreeTooHigh, "primitivity is defined for degree <= n");
    return lefschetz(a, omega, n - k + 1).is_zero();
}

std::vector<Scalar> coordinates(const Form& a, int degree, const GradedBasis& basis)
{
    std::vector<Scalar> v(basis.size(degree));
    for (const auto& [m, c] : a.terms()) {
        if (popcount(m) != degree)
            throw Error(ErrorKind::WrongDegree, "form has a term outside degree " + std::to_string(degree));
        v[basis.index_of(m)] = c;
    }
    return v;
}

Form from_coordinates(const std::vector<Scalar>& coords, int degree, const GradedBasis& basis)
{
    Form f(basis.dimension());
    const auto& masks = basis.degree(degree);
    for (std::size_t i = 0; i < coords.size(); ++i)
        f.add_term(masks[i], coords[i]);
    return f;
}

}  // namespace pcw
