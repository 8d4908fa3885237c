#pragma once

#include "pcw/forms.hpp"
#include "pcw/linalg.hpp"
#include "pcw/model.hpp"

#include <string_view>
#include <vector>

namespace pcw {

/// Exterior derivative: the derivation extending the structure equations on
/// generators and scalar_diff on coefficients. Throws UndeclaredSymbol.
Form d(const Form& a, const ManifoldModel& model);

/// Pullback by J: e_i is replaced by e_i o J = -(row i of the J matrix).
/// On 2-forms this is alpha(J., J.), on 1-forms beta(J.).
Form j_involution(const Form& a, const ManifoldModel& model);

/// (a + s * j_involution(a)) / 2 for s = +1 or -1. Throws WrongDegree unless a is a 2-form.
Form proj_J(const Form& a, int sign, const ManifoldModel& model);

/// Metric and symplectic data derived once from a model: inverse metric,
/// volume coefficient, per-degree Gram matrices and star matrices.
/// Star matrices solve  e_I ^ *b = <e_I, b> dvol  against the wedge pairing.
class Geometry {
public:
    /// Throws DivisionByZero when the metric or omega is degenerate.
    explicit Geometry(ManifoldModel model);

    const ManifoldModel& model() const { return model_; }
    const GradedBasis& basis() const { return basis_; }
    int dim() const { return model_.dim; }
    int half_dim() const { return model_.dim / 2; }

    /// dvol = volume_coefficient() * e_1 ^ ... ^ e_2n, equal to omega^n / n!.
    const Scalar& volume_coefficient() const { return vol_; }
    const Matrix& inverse_metric() const { return inverse_metric_; }
    /// Inverse of omega's coefficient matrix.
    const Matrix& poisson() const { return poisson_; }
    const Matrix& gram(int k) const { return gram_.at(k); }
    const Matrix& symplectic_gram(int k) const { return sgram_.at(k); }
    const Matrix& hodge_matrix(int k) const { return hodge_.at(k); }
    const Matrix& symplectic_star_matrix(int k) const { return sstar_.at(k); }

    /// <a, b>_g for homogeneous forms of equal degree.
    Scalar inner(const Form& a, const Form& b) const;

private:
    ManifoldModel model_;
    GradedBasis basis_;
    Scalar vol_;
    Matrix inverse_metric_;
    Matrix poisson_;
    std::vector<Matrix> gram_, sgram_, hodge_, sstar_;
};

/// k x k minors of a 2n x 2n matrix over the degree-k basis.
Matrix minor_gram(const Matrix& m, int k, const GradedBasis& basis);

Form hodge_star(const Form& a, const Geometry& geo);
Form symplectic_star(const Form& a, const Geometry& geo);
/// a - (<a, omega>_g / n) omega on 2-forms.
Form proj_primitive(const Form& a, const Geometry& geo);
/// (-1)^(k+1) *_s d *_s.
Form d_lambda(const Form& a, const Geometry& geo);
/// -*_g d *_g.
Form codifferential(const Form& a, const Geometry& geo);
Form laplacian(const Form& a, const Geometry& geo);
/// Delta psi - (1/n) <Delta psi, omega>_g omega. Throws NotPrimitive.
Form p_j(const Form& psi, const Geometry& geo);
/// d d^Lambda.
Form dd_lambda(const Form& a, const Geometry& geo);
/// *_g d^Lambda *_g.
Form d_lambda_adj(const Form& a, const Geometry& geo);
/// (-1)^(k+1) *_g d d^Lambda *_g.
Form dd_lambda_adj(const Form& a, const Geometry& geo);
/// Anti-invariant part of d theta, for 1-forms.
Form d_J_minus(const Form& theta, const Geometry& geo);
/// Anti-self-dual part of d theta, for 1-forms in dimension 4.
Form d_g_minus(const Form& theta, const Geometry& geo);

enum class OperatorKind {
    d,
    star_g,
    star_s,
    J_inv,
    proj_J_plus,
    proj_J_minus,
    proj_primitive,
    codiff,
    d_lambda,
    d_lambda_adj,
    laplacian,
    dd_lambda,
    dd_lambda_adj,
    P_J,
    d_J_minus,
    d_g_minus,
};

std::string_view to_string(OperatorKind kind);
std::vector<OperatorKind> all_operator_kinds();

/// Degree of op(a) for a of degree k. Throws WrongDegree when k is outside
/// the operator's domain. May return -1 or dim + 1 (d on top forms, d* on
/// functions): the codomain is then the zero space.
int codomain_degree(OperatorKind kind, int k, int dim);

/// Applies the operator after checking the input degree. P_J is applied as
/// P_J o proj_primitive so that it is defined on all 2-forms.
Form apply(OperatorKind kind, const Form& a, const Geometry& geo);

/// Column j holds the coordinates of op(basis_j).
struct OperatorMatrix {
    OperatorKind kind;
    int domain_degree;
    int codomain_degree;
    Matrix entries;
};

/// Throws FunctionCoefficientModel on models with function coefficients.
OperatorMatrix assemble(OperatorKind kind, int k, const Geometry& geo);

}  // namespace pcw
