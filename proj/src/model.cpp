#include "pcw/model.hpp"

#include "pcw/error.hpp"
#include "pcw/operators.hpp"

#include <algorithm>

namespace pcw {

bool ManifoldModel::has_function_coefficients() const
{
    auto scalar_has = [&](const Scalar& s) { return symbols.involves_function(s); };
    auto form_has = [&](const Form& f) {
        return std::any_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return scalar_has(t.second); });
    };
    auto matrix_has = [&](const Matrix& m) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (scalar_has(m(r, c)))
                    return true;
        return false;
    };
    return std::any_of(structure.begin(), structure.end(), form_has) || form_has(omega) || matrix_has(metric) ||
           matrix_has(j_matrix);
}

std::optional<int> ManifoldModel::generator_index(const std::string& n) const
{
    auto it = std::find(generators.begin(), generators.end(), n);
    if (it == generators.end())
        return std::nullopt;
    return static_cast<int>(it - generators.begin());
}

bool ManifoldModel::operator==(const ManifoldModel& other) const
{
    return name == other.name && dim == other.dim && generators == other.generators &&
           structure == other.structure && symbols == other.symbols && metric == other.metric &&
           omega == other.omega && j_matrix == other.j_matrix;
}

Matrix two_form_matrix(const Form& f)
{
    int n = f.dimension();
    Matrix w(n, n);
    for (const auto& [m, c] : f.terms()) {
        if (popcount(m) != 2)
            throw Error(ErrorKind::WrongDegree, "expected a 2-form");
        auto idx = mask_indices(m);
        w(idx[0], idx[1]) = c;
        w(idx[1], idx[0]) = -c;
    }
    return w;
}

bool ModelVerdict::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ModelCheck& c) { return c.passed; });
}

const ModelCheck* ModelVerdict::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

// First nonzero entry of m, rendered as "(gi, gj): value".
std::string first_nonzero_entry(const Matrix& m, const ManifoldModel& model)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                return "(" + model.generators[r] + ", " + model.generators[c] + "): " + model.format(m(r, c));
    return "";
}

}  // namespace

ModelVerdict validate(const ManifoldModel& model)
{
    ModelVerdict v;
    const int n = model.half_dim();

    ModelCheck dsq{"d_squared", true, {}};
    for (int i = 0; i < model.dim; ++i) {
        try {
            Form dd = d(model.structure[i], model);
            if (!dd.is_zero()) {
                dsq.passed = false;
                dsq.witness += (dsq.witness.empty() ? "" : "; ") + ("d(d(" + model.generators[i] + ")) = " + model.format(dd));
            }
        } catch (const Error& e) {
            dsq.passed = false;
            dsq.witness += (dsq.witness.empty() ? "" : "; ") + std::string(e.what());
        }
    }
    v.checks.push_back(dsq);

    ModelCheck domega{"d_omega", true, {}};
    try {
        Form dw = d(model.omega, model);
        if (!dw.is_zero()) {
            domega.passed = false;
            domega.witness = model.format(dw);
        }
    } catch (const Error& e) {
        domega.passed = false;
        domega.witness = e.what();
    }
    v.checks.push_back(domega);

    Form top = lefschetz(Form::constant(model.dim, Scalar(1)), model.omega, n);
    ModelCheck nondeg{"nondegenerate", true, {}};
    if (top.is_zero()) {
        nondeg.passed = false;
        nondeg.witness = "omega^n = 0";
    }
    v.checks.push_back(nondeg);

    Matrix a = model.j_matrix;
    ModelCheck jsq{"J_squared", true, {}};
    Matrix jj = a * a + Matrix::identity(model.dim);
    if (!jj.is_zero()) {
        jsq.passed = false;
        jsq.witness = "J^2 + 1 nonzero at " + first_nonzero_entry(jj, model);
    }
    v.checks.push_back(jsq);

    ModelCheck sym{"metric_symmetric", true, {}};
    Matrix asym = model.metric - model.metric.transpose();
    if (!asym.is_zero()) {
        sym.passed = false;
        sym.witness = "g - g^T nonzero at " + first_nonzero_entry(asym, model);
    }
    v.checks.push_back(sym);

    Scalar det_g = determinant(model.metric);
    ModelCheck inv{"metric_invertible", true, {}};
    if (det_g.is_zero()) {
        inv.passed = false;
        inv.witness = "det g = 0";
    }
    v.checks.push_back(inv);

    ModelCheck compat{"compatibility", true, {}};
    Matrix from_omega = Scalar(-1) * (two_form_matrix(model.omega) * a);
    Matrix diff = model.metric - from_omega;
    if (!diff.is_zero()) {
        compat.passed = false;
        compat.witness = "g - omega(., J.) nonzero at " + first_nonzero_entry(diff, model);
    }
    v.checks.push_back(compat);

    ModelCheck norm{"normalization", true, {}};
    ModelCheck vol{"volume", true, {}};
    if (det_g.is_zero()) {
        norm.passed = vol.passed = false;
        norm.witness = vol.witness = "metric is singular";
    } else {
        GradedBasis basis(model.dim);
        Matrix g2 = minor_gram(inverse(model.metric), 2, basis);
        auto w = coordinates(model.omega, 2, basis);
        Scalar ww = bilinear(w, g2, w);
        if (!(ww == Scalar(n))) {
            norm.passed = false;
            norm.witness = "g(omega, omega) = " + model.format(ww);
        }
        Scalar vc = top.coefficient(basis.top());
        if (!(vc * vc == det_g)) {
            vol.passed = false;
            vol.witness = "det g = " + model.format(det_g) + ", (omega^n/n!)^2 = " + model.format(vc * vc);
        }
    }
    v.checks.push_back(norm);
    v.checks.push_back(vol);
    return v;
}

namespace {

ManifoldModel skeleton(const std::string& name, std::vector<std::string> gens)
{
    ManifoldModel m;
    m.name = name;
    m.dim = static_cast<int>(gens.size());
    m.generators = std::move(gens);
    m.structure.assign(m.dim, Form(m.dim));
    m.metric = Matrix::identity(m.dim);
    m.j_matrix = Matrix(m.dim, m.dim);
    m.omega = Form(m.dim);
    return m;
}

Form e(const ManifoldModel& m, int i) { return Form::generator(m.dim, i); }
Form e(const ManifoldModel& m, int i, int j) { return wedge(e(m, i), e(m, j)); }

// J e_(2k) = e_(2k+1), J e_(2k+1) = -e_(2k) for each consecutive pair.
void standard_j(ManifoldModel& m)
{
    for (int k = 0; k < m.dim; k += 2) {
        m.j_matrix(k, k + 1) = Scalar(1);
        m.j_matrix(k + 1, k) = Scalar(-1);
    }
}

void standard_omega(ManifoldModel& m)
{
    for (int k = 0; k < m.dim; k += 2)
        m.omega += e(m, k, k + 1);
}

ManifoldModel t4_flat()
{
    auto m = skeleton("t4-flat", {"e1", "e2", "e3", "e4"});
    standard_omega(m);
    standard_j(m);
    return m;
}

ManifoldModel t4_m()
{
    auto m = skeleton("t4-m", {"e1", "e2", "e3", "e4"});
    auto& t = m.symbols;
    for (const char* s : {"m", "m_2", "m_4", "m_22", "m_24", "m_44"})
        t.declare(s, SymbolKind::Function);
    auto sym = [&](const char* s) { return Scalar::symbol(*t.find(s)); };
    t.set_differential("m", {{1, sym("m_2")}, {3, sym("m_4")}});
    t.set_differential("m_2", {{1, sym("m_22")}, {3, sym("m_24")}});
    t.set_differential("m_4", {{1, sym("m_24")}, {3, sym("m_44")}});
    Scalar mm = sym("m");
    m.metric(0, 0) = mm.inverse();
    m.metric(1, 1) = mm;
    standard_omega(m);
    standard_j(m);
    m.j_matrix(0, 1) = mm;
    m.j_matrix(1, 0) = -mm.inverse();
    return m;
}

ManifoldModel m6c_with(const std::string& name, int beta_sign)
{
    auto m = skeleton(name, {"a1", "b1", "a2", "b2", "gamma", "eta"});
    Scalar c = Scalar::symbol(m.symbols.declare("c", SymbolKind::Parameter));
    const int gamma = 4;
    for (int a : {0, 2}) {
        m.structure[a] = Scalar(-1) * c * e(m, a, gamma);
        m.structure[a + 1] = Scalar(beta_sign) * c * e(m, a + 1, gamma);
    }
    standard_omega(m);
    standard_j(m);
    return m;
}

ManifoldModel kodaira_thurston()
{
    auto m = skeleton("kodaira-thurston", {"e1", "e2", "e3", "e4"});
    m.structure[3] = e(m, 1, 2);
    standard_omega(m);
    standard_j(m);
    return m;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"t4-flat", "t4-m", "m6c", "kodaira-thurston"}; }

ManifoldModel builtin(const std::string& name)
{
    if (name == "t4-flat")
        return t4_flat();
    if (name == "t4-m")
        return t4_m();
    if (name == "m6c")
        return m6c_with("m6c", +1);
    if (name == "kodaira-thurston")
        return kodaira_thurston();
    throw Error(ErrorKind::UnknownBuiltin, "unknown builtin model '" + name + "'");
}

ManifoldModel m6c_as_printed() { return m6c_with("m6c-as-printed", -1); }

}  // namespace pcw
