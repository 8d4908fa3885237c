#include "pcw/operators.hpp"

#include "pcw/error.hpp"

namespace pcw {

namespace {

Form formal_to_form(const FormalDifferential& df, int dim)
{
    Form f(dim);
    for (const auto& [gen, c] : df)
        f.add_term(Mask(1) << gen, c);
    return f;
}

// d(e_i1 ^ ... ^ e_ik) = sum_j (-1)^j e_i1 ^ .. ^ d(e_ij) ^ .. ^ e_ik.
Form d_monomial(Mask m, const ManifoldModel& model)
{
    Form out(model.dim);
    auto idx = mask_indices(m);
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const Form& de = model.structure[idx[j]];
        if (de.is_zero())
            continue;
        Mask before = 0, after = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            (i < j ? before : after) |= i == j ? 0 : Mask(1) << idx[i];
        Form term = wedge(wedge(Form::monomial(model.dim, before), de), Form::monomial(model.dim, after));
        if (j % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

Form apply_matrix(const Form& a, const Matrix& m, int from, int to, const GradedBasis& basis)
{
    if (a.is_zero())
        return Form(a.dimension());
    return from_coordinates(m * coordinates(a, from, basis), to, basis);
}

int degree_of(const Form& a) { return a.require_degree(); }

}  // namespace

Form d(const Form& a, const ManifoldModel& model)
{
    if (a.dimension() != model.dim)
        throw Error(ErrorKind::DimensionMismatch, "form and model have different dimensions");
    Form out(model.dim);
    for (const auto& [m, c] : a.terms()) {
        auto dc = scalar_diff(c, model.symbols);
        if (!dc.empty())
            out += wedge(formal_to_form(dc, model.dim), Form::monomial(model.dim, m));
        out += d_monomial(m, model) * c;
    }
    return out;
}

Form j_involution(const Form& a, const ManifoldModel& model)
{
    std::vector<Form> pulled;
    for (int i = 0; i < model.dim; ++i) {
        Form row(model.dim);
        for (int j = 0; j < model.dim; ++j)
            row.add_term(Mask(1) << j, -model.j_matrix(i, j));
        pulled.push_back(std::move(row));
    }
    Form out(a.dimension());
    for (const auto& [m, c] : a.terms()) {
        Form term = Form::constant(model.dim, c);
        for (int i : mask_indices(m))
            term = wedge(term, pulled[i]);
        out += term;
    }
    return out;
}

Form proj_J(const Form& a, int sign, const ManifoldModel& model)
{
    if (!a.is_zero() && a.degree() != 2)
        throw Error(ErrorKind::WrongDegree, "J-projection is defined on 2-forms");
    Form ja = j_involution(a, model);
    return (sign > 0 ? a + ja : a - ja) * Scalar(mpq_class(1, 2));
}

Matrix minor_gram(const Matrix& m, int k, const GradedBasis& basis)
{
    const auto& masks = basis.degree(k);
    Matrix out(masks.size(), masks.size());
    for (std::size_t r = 0; r < masks.size(); ++r) {
        auto ri = mask_indices(masks[r]);
        for (std::size_t c = 0; c < masks.size(); ++c) {
            auto ci = mask_indices(masks[c]);
            Matrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub(i, j) = m(ri[i], ci[j]);
            out(r, c) = k == 0 ? Scalar(1) : determinant(std::move(sub));
        }
    }
    return out;
}

Geometry::Geometry(ManifoldModel model) : model_(std::move(model)), basis_(model_.dim)
{
    const int dim = model_.dim;
    Form top = lefschetz(Form::constant(dim, Scalar(1)), model_.omega, half_dim());
    vol_ = top.coefficient(basis_.top());
    if (vol_.is_zero())
        throw Error(ErrorKind::DivisionByZero, "omega is degenerate");
    inverse_metric_ = inverse(model_.metric);
    poisson_ = inverse(two_form_matrix(model_.omega));
    for (int k = 0; k <= dim; ++k) {
        gram_.push_back(minor_gram(inverse_metric_, k, basis_));
        sgram_.push_back(minor_gram(poisson_, k, basis_));
        // pairing(I, K) = coefficient of the top monomial in e_I ^ e_K.
        const auto& rows = basis_.degree(k);
        const auto& cols = basis_.degree(dim - k);
        Matrix pairing(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                if ((rows[r] | cols[c]) == basis_.top())
                    pairing(r, c) = Scalar(merge_sign(rows[r], cols[c]));
        hodge_.push_back(vol_ * solve(pairing, gram_.back()));
        sstar_.push_back(vol_ * solve(pairing, sgram_.back()));
    }
}

Scalar Geometry::inner(const Form& a, const Form& b) const
{
    if (a.is_zero() || b.is_zero())
        return Scalar();
    int k = degree_of(a);
    if (degree_of(b) != k)
        return Scalar();
    return bilinear(coordinates(a, k, basis_), gram(k), coordinates(b, k, basis_));
}

Form hodge_star(const Form& a, const Geometry& geo)
{
    int k = degree_of(a);
    return apply_matrix(a, geo.hodge_matrix(k), k, geo.dim() - k, geo.basis());
}

Form symplectic_star(const Form& a, const Geometry& geo)
{
    int k = degree_of(a);
    return apply_matrix(a, geo.symplectic_star_matrix(k), k, geo.dim() - k, geo.basis());
}

Form proj_primitive(const Form& a, const Geometry& geo)
{
    if (!a.is_zero() && a.degree() != 2)
        throw Error(ErrorKind::WrongDegree, "primitive projection is defined on 2-forms");
    const Form& w = geo.model().omega;
    return a - w * (geo.inner(a, w) / Scalar(geo.half_dim()));
}

Form d_lambda(const Form& a, const Geometry& geo)
{
    int k = degree_of(a);
    Form r = symplectic_star(d(symplectic_star(a, geo), geo.model()), geo);
    return (k + 1) % 2 ? -r : r;
}

Form codifferential(const Form& a, const Geometry& geo)
{
    degree_of(a);
    return -hodge_star(d(hodge_star(a, geo), geo.model()), geo);
}

Form laplacian(const Form& a, const Geometry& geo)
{
    degree_of(a);
    return d(codifferential(a, geo), geo.model()) + codifferential(d(a, geo.model()), geo);
}

Form p_j(const Form& psi, const Geometry& geo)
{
    if (!psi.is_zero() && psi.degree() != 2)
        throw Error(ErrorKind::WrongDegree, "P_J acts on 2-forms");
    if (!is_primitive(psi, geo.model().omega))
        throw Error(ErrorKind::NotPrimitive, "P_J requires a primitive 2-form");
    Form lap = laplacian(psi, geo);
    const Form& w = geo.model().omega;
    return lap - w * (geo.inner(lap, w) / Scalar(geo.half_dim()));
}

Form dd_lambda(const Form& a, const Geometry& geo) { return d(d_lambda(a, geo), geo.model()); }

Form d_lambda_adj(const Form& a, const Geometry& geo)
{
    degree_of(a);
    return hodge_star(d_lambda(hodge_star(a, geo), geo), geo);
}

Form dd_lambda_adj(const Form& a, const Geometry& geo)
{
    int k = degree_of(a);
    Form r = hodge_star(dd_lambda(hodge_star(a, geo), geo), geo);
    return (k + 1) % 2 ? -r : r;
}

Form d_J_minus(const Form& theta, const Geometry& geo)
{
    if (!theta.is_zero() && theta.degree() != 1)
        throw Error(ErrorKind::WrongDegree, "d_J^- acts on 1-forms");
    return proj_J(d(theta, geo.model()), -1, geo.model());
}

Form d_g_minus(const Form& theta, const Geometry& geo)
{
    if (geo.dim() != 4)
        throw Error(ErrorKind::DimensionMismatch, "anti-self-dual projection of 2-forms needs dimension 4");
    if (!theta.is_zero() && theta.degree() != 1)
        throw Error(ErrorKind::WrongDegree, "d_g^- acts on 1-forms");
    Form dt = d(theta, geo.model());
    if (dt.is_zero())
        return dt;
    return (dt - hodge_star(dt, geo)) * Scalar(mpq_class(1, 2));
}

std::string_view to_string(OperatorKind kind)
{
    switch (kind) {
    case OperatorKind::d: return "d";
    case OperatorKind::star_g: return "star_g";
    case OperatorKind::star_s: return "star_s";
    case OperatorKind::J_inv: return "J_inv";
    case OperatorKind::proj_J_plus: return "proj_J_plus";
    case OperatorKind::proj_J_minus: return "proj_J_minus";
    case OperatorKind::proj_primitive: return "proj_primitive";
    case OperatorKind::codiff: return "codiff";
    case OperatorKind::d_lambda: return "d_lambda";
    case OperatorKind::d_lambda_adj: return "d_lambda_adj";
    case OperatorKind::laplacian: return "laplacian";
    case OperatorKind::dd_lambda: return "dd_lambda";
    case OperatorKind::dd_lambda_adj: return "dd_lambda_adj";
    case OperatorKind::P_J: return "P_J";
    case OperatorKind::d_J_minus: return "d_J_minus";
    case OperatorKind::d_g_minus: return "d_g_minus";
    }
    return "?";
}

std::vector<OperatorKind> all_operator_kinds()
{
    return {OperatorKind::d,         OperatorKind::star_g,        OperatorKind::star_s,
            OperatorKind::J_inv,     OperatorKind::proj_J_plus,   OperatorKind::proj_J_minus,
            OperatorKind::proj_primitive, OperatorKind::codiff,   OperatorKind::d_lambda,
            OperatorKind::d_lambda_adj, OperatorKind::laplacian,  OperatorKind::dd_lambda,
            OperatorKind::dd_lambda_adj, OperatorKind::P_J,       OperatorKind::d_J_minus,
            OperatorKind::d_g_minus};
}

int codomain_degree(OperatorKind kind, int k, int dim)
{
    auto need = [&](bool ok) {
        if (!ok)
            throw Error(ErrorKind::WrongDegree, std::string(to_string(kind)) + " is not defined on degree " +
                                                    std::to_string(k));
    };
    need(k >= 0 && k <= dim);
    switch (kind) {
    case OperatorKind::d:
    case OperatorKind::d_lambda_adj:
        return k + 1;
    case OperatorKind::codiff:
    case OperatorKind::d_lambda:
        return k - 1;
    case OperatorKind::star_g:
    case OperatorKind::star_s:
        return dim - k;
    case OperatorKind::J_inv:
    case OperatorKind::laplacian:
    case OperatorKind::dd_lambda:
    case OperatorKind::dd_lambda_adj:
        return k;
    case OperatorKind::proj_J_plus:
    case OperatorKind::proj_J_minus:
    case OperatorKind::proj_primitive:
    case OperatorKind::P_J:
        need(k == 2);
        return 2;
    case OperatorKind::d_J_minus:
        need(k == 1);
        return 2;
    case OperatorKind::d_g_minus:
        need(k == 1 && dim == 4);
        return 2;
    }
    return k;
}

Form apply(OperatorKind kind, const Form& a, const Geometry& geo)
{
    codomain_degree(kind, a.require_degree(), geo.dim());
    const auto& model = geo.model();
    switch (kind) {
    case OperatorKind::d: return d(a, model);
    case OperatorKind::star_g: return hodge_star(a, geo);
    case OperatorKind::star_s: return symplectic_star(a, geo);
    case OperatorKind::J_inv: return j_involution(a, model);
    case OperatorKind::proj_J_plus: return proj_J(a, +1, model);
    case OperatorKind::proj_J_minus: return proj_J(a, -1, model);
    case OperatorKind::proj_primitive: return proj_primitive(a, geo);
    case OperatorKind::codiff: return codifferential(a, geo);
    case OperatorKind::d_lambda: return d_lambda(a, geo);
    case OperatorKind::d_lambda_adj: return d_lambda_adj(a, geo);
    case OperatorKind::laplacian: return laplacian(a, geo);
    case OperatorKind::dd_lambda: return dd_lambda(a, geo);
    case OperatorKind::dd_lambda_adj: return dd_lambda_adj(a, geo);
    case OperatorKind::P_J: return p_j(proj_primitive(a, geo), geo);
    case OperatorKind::d_J_minus: return d_J_minus(a, geo);
    case OperatorKind::d_g_minus: return d_g_minus(a, geo);
    }
    return a;
}

OperatorMatrix assemble(OperatorKind kind, int k, const Geometry& geo)
{
    if (geo.model().has_function_coefficients())
        throw Error(ErrorKind::FunctionCoefficientModel,
                    "model '" + geo.model().name + "' has function coefficients; only pointwise verification is available");
    int to = codomain_degree(kind, k, geo.dim());
    const auto& basis = geo.basis();
    std::size_t rows = (to >= 0 && to <= geo.dim()) ? basis.size(to) : 0;
    const auto& masks = basis.degree(k);
    Matrix m(rows, masks.size());
    for (std::size_t c = 0; c < masks.size(); ++c) {
        if (rows == 0)
            break;
        Form img = apply(kind, Form::monomial(geo.dim(), masks[c]), geo);
        auto col = coordinates(img, to, basis);
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = col[r];
    }
    return {kind, k, to, std::move(m)};
}

}  // namespace pcw
