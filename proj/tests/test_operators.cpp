#include "support.hpp"

#include "pcw/error.hpp"
#include "pcw/oracle.hpp"

#include <doctest.h>

#include <functional>

using namespace pcw;
using namespace pcw::test;

namespace {

using Op = std::function<Form(const Form&)>;

// Column j = coordinates of op(basis_j); works on function-coefficient models too.
Matrix matrix_of(const Op& op, int k, int target, const Geometry& geo)
{
    const auto& basis = geo.basis();
    std::vector<Vector> cols;
    for (Mask m : basis.degree(k))
        cols.push_back(coordinates(op(Form::monomial(geo.dim(), m)), target, basis));
    return Matrix::from_columns(cols, basis.size(target));
}

Subspace kernel_of(const Op& op, int k, int target, const Geometry& geo)
{
    Subspace all = Subspace::whole(geo.dim(), k, geo.basis().size(k));
    return kernel_within(matrix_of(op, k, target, geo), all);
}

std::vector<Form> primitive_basis(int k, const Geometry& geo)
{
    int n = geo.half_dim();
    const Form& omega = geo.model().omega;
    if (2 * n - k + 2 > geo.dim())  // omega^(n+1) = 0
        return Subspace::whole(geo.dim(), k, geo.basis().size(k)).forms(geo.basis());
    Subspace prim = kernel_of([&](const Form& a) { return lefschetz(a, omega, n - k + 1); }, k, 2 * n - k + 2, geo);
    return prim.forms(geo.basis());
}

Scalar sign(int e) { return Scalar(e % 2 ? -1 : 1); }

}  // namespace

TEST_CASE("exterior derivative examples")
{
    ManifoldModel t4m = builtin("t4-m");
    CHECK(d(F(t4m, "e1^e3 - m*e2^e4"), t4m).is_zero());
    CHECK(d(F(t4m, "e1^e4 + m*e2^e3"), t4m) == F(t4m, "m_4*e2^e3^e4"));

    // Leibniz with d e4 = e2^e3: d(e1^e4) = -e1^e2^e3.
    ManifoldModel kt = builtin("kodaira-thurston");
    CHECK(d(F(kt, "e1^e4"), kt) == F(kt, "-e1^e2^e3"));
}

TEST_CASE("graded Leibniz rule")
{
    for (const char* name : {"m6c", "kodaira-thurston", "t4-m"}) {
        CAPTURE(name);
        ManifoldModel m = builtin(name);
        GradedBasis basis(m.dim);
        std::mt19937 rng(31);
        for (int i = 0; i < 10; ++i) {
            int p = i % 3 + 1, q = (i + 1) % 2 + 1;
            Form a = random_form(rng, basis, p), b = random_form(rng, basis, q);
            if (m.has_function_coefficients())
                a *= S(m, "m");
            CHECK(d(wedge(a, b), m) == wedge(d(a, m), b) + sign(p) * wedge(a, d(b, m)));
        }
    }
}

TEST_CASE("hodge star examples")
{
    Geometry flat(builtin("t4-flat"));
    CHECK(hodge_star(F(flat, "e1^e2"), flat) == F(flat, "e3^e4"));

    Geometry t4m(builtin("t4-m"));
    Form psi = F(t4m, "e1^e3 - m*e2^e4");
    CHECK(hodge_star(psi, t4m) == psi);

    Geometry m6(builtin("m6c"));
    CHECK(hodge_star(F(m6, "gamma^eta"), m6) == F(m6, "a1^b1^a2^b2"));

    try {
        hodge_star(F(flat, "e1 + e1^e2"), flat);
        FAIL("expected MixedDegree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MixedDegree);
    }
}

TEST_CASE("symplectic star examples")
{
    Geometry flat(builtin("t4-flat"));
    CHECK(symplectic_star(flat.model().omega, flat) == flat.model().omega);
    CHECK(symplectic_star(F(flat, "e1^e3"), flat) == F(flat, "-e1^e3"));

    Geometry kt(builtin("kodaira-thurston"));
    Form e23 = F(kt, "e2^e3");
    CHECK(symplectic_star(symplectic_star(e23, kt), kt) == e23);

    CHECK_THROWS_AS(symplectic_star(F(flat, "e1 + e1^e2"), flat), Error);
}

TEST_CASE("star defining identities")
{
    // a ^ *b = <a, b> dvol on basis pairs, for both stars.
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        Geometry geo(builtin(name));
        const auto& basis = geo.basis();
        Form dvol = Form::monomial(geo.dim(), basis.top(), geo.volume_coefficient());
        for (int k = 0; k <= geo.dim(); ++k)
            for (Mask a : basis.degree(k))
                for (Mask b : basis.degree(k)) {
                    Form fa = Form::monomial(geo.dim(), a), fb = Form::monomial(geo.dim(), b);
                    CHECK(wedge(fa, hodge_star(fb, geo)) == geo.inner(fa, fb) * dvol);
                    Scalar s = geo.symplectic_gram(k)(basis.index_of(a), basis.index_of(b));
                    CHECK(wedge(fa, symplectic_star(fb, geo)) == s * dvol);
                }
    }
}

TEST_CASE("J involution and projections")
{
    Geometry m6(builtin("m6c"));
    Form z = F(m6, "a1^b2 - a2^b1");
    CHECK(j_involution(z, m6.model()) == -z);
    CHECK(j_involution(m6.model().omega, m6.model()) == m6.model().omega);

    ManifoldModel kt = builtin("kodaira-thurston");
    CHECK(j_involution(F(kt, "e1^e3"), kt) == F(kt, "e2^e4"));
    CHECK(proj_J(F(kt, "e1^e3"), -1, kt) == F(kt, "(e1^e3 - e2^e4)/2"));
    CHECK(proj_J(kt.omega, 1, kt) == kt.omega);
    CHECK(proj_J(kt.omega, -1, kt).is_zero());

    ManifoldModel t4m = builtin("t4-m");
    Form psi2 = F(t4m, "e1^e4 + m*e2^e3");
    CHECK(proj_J(psi2, -1, t4m) == psi2);
    CHECK(proj_J(F(t4m, "e1^e3 - m*e2^e4"), -1, t4m) == F(t4m, "e1^e3 - m*e2^e4"));

    try {
        proj_J(F(kt, "e1"), 1, kt);
        FAIL("expected WrongDegree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongDegree);
    }

    for (const auto& name : builtin_names()) {
        ManifoldModel m = builtin(name);
        GradedBasis basis(m.dim);
        for (Mask b : basis.degree(2)) {
            Form a = Form::monomial(m.dim, b);
            CHECK(j_involution(j_involution(a, m), m) == a);
            CHECK(proj_J(a, 1, m) + proj_J(a, -1, m) == a);
        }
    }
}

TEST_CASE("d lambda examples")
{
    for (const auto& name : builtin_names()) {
        Geometry geo(builtin(name));
        CHECK(d_lambda(geo.model().omega, geo).is_zero());
    }
    Geometry kt(builtin("kodaira-thurston"));
    CHECK(d_lambda(F(kt, "e2^e3"), kt).is_zero());

    // Brute-force composition through the oracle star.
    const ManifoldModel& m = kt.model();
    Form e14 = F(kt, "e1^e4");
    Form expected = Scalar(1) * oracle_star(d(oracle_star(e14, m, StarKind::symplectic), m), m, StarKind::symplectic);
    expected = sign(3) * expected;
    Form got = d_lambda(e14, kt);
    CHECK_FALSE(got.is_zero());
    CHECK(got == expected);
    CHECK(got.degree() == 1);
}

TEST_CASE("codifferential and laplacian examples")
{
    Geometry kt(builtin("kodaira-thurston"));
    CHECK(laplacian(F(kt, "e1^e2 - e3^e4"), kt).is_zero());

    Geometry flat(builtin("t4-flat"));
    CHECK(codifferential(Scalar(5) * flat.model().omega, flat).is_zero());

    Geometry m6(builtin("m6c"));
    CHECK(laplacian(F(m6, "a1^b2"), m6).is_zero());
    CHECK(codifferential(F(m6, "a1^b2"), m6).is_zero());
    CHECK(d(F(m6, "a1^b2"), m6.model()).is_zero());
}

TEST_CASE("P_J examples")
{
    Geometry m6(builtin("m6c"));
    CHECK(p_j(F(m6, "a1^b1 - gamma^eta"), m6).is_zero());

    Geometry kt(builtin("kodaira-thurston"));
    for (const char* h : {"e1^e2 - e3^e4", "e1^e3", "e2^e4"})
        CHECK(p_j(F(kt, h), kt).is_zero());
    Form e23 = F(kt, "e2^e3");
    CHECK(d(e23, kt.model()).is_zero());
    CHECK_FALSE(codifferential(e23, kt).is_zero());
    CHECK_FALSE(p_j(e23, kt).is_zero());

    try {
        p_j(kt.model().omega, kt);
        FAIL("expected NotPrimitive");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrimitive);
    }
}

TEST_CASE("P_J output is primitive")
{
    for (const char* name : {"m6c", "kodaira-thurston", "t4-m"}) {
        CAPTURE(name);
        Geometry geo(builtin(name));
        auto prim = primitive_basis(2, geo);
        std::mt19937 rng(37);
        std::uniform_int_distribution<int> c(-2, 2);
        for (int i = 0; i < 5; ++i) {
            Form psi(geo.dim());
            for (const auto& b : prim)
                psi += Scalar(c(rng)) * b;
            CHECK(is_primitive(p_j(psi, geo), geo.model().omega));
        }
    }
}

TEST_CASE("dd lambda operator examples")
{
    for (const auto& name : builtin_names()) {
        Geometry geo(builtin(name));
        CHECK(dd_lambda(geo.model().omega, geo).is_zero());
    }
    Geometry kt(builtin("kodaira-thurston"));
    CHECK(dd_lambda_adj(F(kt, "e1^e4"), kt).is_zero());

    Geometry flat(builtin("t4-flat"));
    CHECK(d_lambda_adj(F(flat, "e1^e3"), flat).is_zero());
    for (OperatorKind k : all_operator_kinds()) {
        if (k == OperatorKind::star_g || k == OperatorKind::star_s || k == OperatorKind::J_inv ||
            k == OperatorKind::proj_J_plus || k == OperatorKind::proj_J_minus || k == OperatorKind::proj_primitive)
            continue;
        for (int deg = 0; deg <= 4; ++deg) {
            bool defined = true;
            try {
                codomain_degree(k, deg, 4);
            } catch (const Error&) {
                defined = false;
            }
            for (Mask m : flat.basis().degree(deg)) {
                Form a = Form::monomial(4, m);
                if (defined)
                    CHECK(apply(k, a, flat).is_zero());
                else
                    CHECK_THROWS_AS(apply(k, a, flat), Error);
            }
        }
    }
    try {
        apply(OperatorKind::d_J_minus, F(flat, "e1^e2"), flat);
        FAIL("expected WrongDegree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongDegree);
    }
}

TEST_CASE("operator identity suite")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        Geometry geo(builtin(name));
        const auto& model = geo.model();
        const auto& basis = geo.basis();
        int dim = geo.dim(), n = geo.half_dim();
        for (int k = 0; k <= dim; ++k) {
            CAPTURE(k);
            for (Mask m : basis.degree(k)) {
                Form a = Form::monomial(dim, m);
                CHECK(d(d(a, model), model).is_zero());
                CHECK(d_lambda(d_lambda(a, geo), geo).is_zero());
                CHECK(d(d_lambda(a, geo), model) == -d_lambda(d(a, model), geo));
                CHECK(symplectic_star(symplectic_star(a, geo), geo) == a);
                CHECK(hodge_star(hodge_star(a, geo), geo) == sign(k) * a);
            }
        }
        CHECK(geo.inner(model.omega, model.omega) == Scalar(n));

        // Weil: *_g (L^r/r!) B = (-1)^(k(k+1)/2) (L^(n-r-k)/(n-r-k)!) J B.
        for (int k = 0; k <= n; ++k)
            for (const auto& b : primitive_basis(k, geo))
                for (int r = 0; r <= n - k; ++r) {
                    Form lhs = hodge_star(lefschetz(b, model.omega, r), geo);
                    Form rhs = sign(k * (k + 1) / 2) * lefschetz(j_involution(b, model), model.omega, n - r - k);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("four-dimensional bundle relations")
{
    for (const char* name : {"t4-flat", "t4-m", "kodaira-thurston"}) {
        CAPTURE(name);
        Geometry geo(builtin(name));
        const auto& model = geo.model();
        auto minus = [&](const Op& op) { return [op](const Form& a) { return op(a) - a; }; };
        auto plus = [&](const Op& op) { return [op](const Form& a) { return op(a) + a; }; };
        Op jinv = [&](const Form& a) { return j_involution(a, model); };
        Op star = [&](const Form& a) { return hodge_star(a, geo); };
        Subspace j_plus = kernel_of(minus(jinv), 2, 2, geo), j_minus = kernel_of(plus(jinv), 2, 2, geo);
        Subspace g_plus = kernel_of(minus(star), 2, 2, geo), g_minus = kernel_of(plus(star), 2, 2, geo);
        Subspace w = Subspace::span_forms(2, {model.omega}, geo.basis());
        CHECK(j_plus == sum(w, g_minus));
        CHECK(intersection(w, g_minus).dim() == 0);
        CHECK(g_plus == sum(w, j_minus));
        CHECK(intersection(w, j_minus).dim() == 0);
        CHECK(j_plus.dim() == 4);
        CHECK(j_minus.dim() == 2);
    }
}
