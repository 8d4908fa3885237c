#pragma once

#include "pcw/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcw {

/// Generator subset; bit i set means generator i is a factor.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Sorted generator indices of a mask.
std::vector<int> mask_indices(Mask m);

/// Sign of e_a ^ e_b relative to e_(a|b); 0 when a and b share a generator.
int merge_sign(Mask a, Mask b);

/// Degree first, then lexicographic on sorted index tuples.
bool basis_less(Mask a, Mask b);

struct BasisOrder {
    bool operator()(Mask a, Mask b) const { return basis_less(a, b); }
};

/// The k-subsets of {0..dim-1} for every k, each list in basis order.
class GradedBasis {
public:
    explicit GradedBasis(int dim);

    int dimension() const { return dim_; }
    const std::vector<Mask>& degree(int k) const { return by_degree_.at(k); }
    std::size_t size(int k) const { return by_degree_.at(k).size(); }
    /// Position of the mask inside its degree's list.
    std::size_t index_of(Mask m) const { return index_[m]; }
    Mask top() const { return dim_ == 32 ? ~Mask(0) : (Mask(1) << dim_) - 1; }

private:
    int dim_;
    std::vector<std::vector<Mask>> by_degree_;
    std::vector<std::size_t> index_;
};

/// Element of the exterior algebra on `dim` generators with Scalar coefficients.
/// Zero coefficients are never stored.
class Form {
public:
    using TermMap = std::map<Mask, Scalar, BasisOrder>;

    explicit Form(int dim = 0) : dim_(dim) {}
    static Form constant(int dim, const Scalar& s);
    static Form generator(int dim, int i);
    static Form monomial(int dim, Mask m, const Scalar& c = Scalar(1));

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coefficient(Mask m) const;

    /// Common degree of all terms, nullopt for mixed forms; the zero form has degree 0.
    std::optional<int> degree() const;
    bool is_homogeneous() const { return degree().has_value(); }
    /// Throws MixedDegree for inhomogeneous forms.
    int require_degree() const;

    Form operator-() const;
    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Scalar& s);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& s) { return a *= s; }
    friend Form operator*(const Scalar& s, Form a) { return a *= s; }

    bool operator==(const Form& other) const { return dim_ == other.dim_ && terms_ == other.terms_; }

    void add_term(Mask m, const Scalar& c);

    /// Form-expression syntax, terms in basis order, e.g. `e1^e2 - m*e3^e4`.
    std::string to_string(const std::vector<std::string>& generators, const std::vector<std::string>& symbols) const;

private:
    void check_dim(const Form& other) const;
    int dim_;
    TermMap terms_;
};

/// Throws DimensionMismatch.
Form wedge(const Form& a, const Form& b);

/// (omega^r / r!) ^ a.
Form lefschetz(const Form& a, const Form& omega, int r);

/// omega^(n-k+1) ^ a == 0 for a of degree k <= n, with 2n = a.dimension().
/// Throws DegreeTooHigh for k > n and MixedDegree for mixed input.
bool is_primitive(const Form& a, const Form& omega);

std::vector<Scalar> coordinates(const Form& a, int degree, const GradedBasis& basis);
Form from_coordinates(const std::vector<Scalar>& coords, int degree, const GradedBasis& basis);

}  // namespace pcw
