#include "pcw/scalar.hpp"

#include "pcw/error.hpp"

#include <algorithm>

namespace pcw {

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) { canonicalize(); }

void Scalar::canonicalize()
{
    if (den_.is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by the zero function");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.is_constant()) {
        num_ *= mpq_class(1) / den_.constant_value();
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.exact_div(g);
        den_ = *den_.exact_div(g);
    }
    mpq_class scale = mpq_class(1) / den_.leading_coefficient();
    num_ *= scale;
    den_ *= scale;
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar operator+(const Scalar& a, const Scalar& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant())
            return Scalar(Scalar::Raw{}, a.num_ + b.num_, a.den_);
        return Scalar(a.num_ + b.num_, a.den_);
    }
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b)
{
    if (a.is_zero() || b.is_zero())
        return Scalar();
    if (a.den_.is_constant() && b.den_.is_constant())
        return Scalar(Scalar::Raw{}, a.num_ * b.num_, Poly(1));
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by the zero function");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned e) const { return Scalar(num_.pow(e), den_.pow(e)); }

Scalar Scalar::partial(std::size_t var) const
{
    Poly dn = num_.derivative(var);
    Poly dd = den_.derivative(var);
    if (dd.is_zero())
        return Scalar(dn, den_);
    return Scalar(dn * den_ - num_ * dd, den_ * den_);
}

std::string Scalar::to_string(const std::vector<std::string>& names) const
{
    if (den_.is_constant())
        return num_.to_string(names);
    std::string n = num_.to_string(names);
    if (!num_.is_monomial())
        n = "(" + n + ")";
    std::string d = den_.to_string(names);
    bool bare = den_.is_monomial() && den_.leading_coefficient() == 1 &&
                std::count_if(den_.leading_monomial().exponents().begin(), den_.leading_monomial().exponents().end(),
                              [](std::uint32_t e) { return e > 0; }) == 1;
    if (!bare)
        d = "(" + d + ")";
    return n + "/" + d;
}

std::string Scalar::to_factor_string(const std::vector<std::string>& names) const
{
    std::string s = to_string(names);
    if (num_.is_monomial())
        return s;
    return "(" + s + ")";
}

std::size_t SymbolTable::declare(const std::string& name, SymbolKind kind)
{
    if (find(name))
        throw Error(ErrorKind::DuplicateDeclaration, "symbol '" + name + "' declared twice");
    symbols_.push_back({name, kind});
    names_.push_back(name);
    return symbols_.size() - 1;
}

void SymbolTable::set_differential(const std::string& name, FormalDifferential diff)
{
    auto idx = find(name);
    if (!idx)
        throw Error(ErrorKind::UndeclaredSymbol, "differential given for undeclared symbol '" + name + "'");
    if (symbols_[*idx].kind != SymbolKind::Function)
        throw Error(ErrorKind::UndeclaredSymbol, "'" + name + "' is a parameter; parameters have zero differential");
    for (auto it = diff.begin(); it != diff.end();)
        it = it->second.is_zero() ? diff.erase(it) : std::next(it);
    if (!diffs_.emplace(*idx, std::move(diff)).second)
        throw Error(ErrorKind::DuplicateDeclaration, "differential of '" + name + "' declared twice");
}

std::optional<std::size_t> SymbolTable::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

const FormalDifferential* SymbolTable::differential(std::size_t i) const
{
    auto it = diffs_.find(i);
    return it == diffs_.end() ? nullptr : &it->second;
}

bool SymbolTable::has_functions() const
{
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [](const Symbol& s) { return s.kind == SymbolKind::Function; });
}

bool SymbolTable::involves_function(const Scalar& s) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].kind == SymbolKind::Function && s.uses_variable(i))
            return true;
    return false;
}

bool SymbolTable::operator==(const SymbolTable& other) const
{
    if (names_ != other.names_ || diffs_ != other.diffs_)
        return false;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].kind != other.symbols_[i].kind)
            return false;
    return true;
}

FormalDifferential scalar_diff(const Scalar& a, const SymbolTable& table)
{
    FormalDifferential out;
    std::size_t nv = std::max(a.numerator().num_vars(), a.denominator().num_vars());
    if (nv > table.size())
        throw Error(ErrorKind::UndeclaredSymbol, "coefficient uses a symbol outside the symbol table");
    for (std::size_t v = 0; v < nv; ++v) {
        if (!a.uses_variable(v) || table.symbol(v).kind == SymbolKind::Parameter)
            continue;
        const FormalDifferential* dv = table.differential(v);
        if (!dv)
            throw Error(ErrorKind::UndeclaredSymbol,
                        "differential of '" + table.symbol(v).name + "' is not declared");
        Scalar p = a.partial(v);
        for (const auto& [gen, coeff] : *dv) {
            Scalar& slot = out[gen];
            slot += p * coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace pcw
