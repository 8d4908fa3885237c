#include "support.hpp"

#include "pcw/cohomology.hpp"
#include "pcw/error.hpp"

#include <doctest.h>

using namespace pcw;
using namespace pcw::test;

namespace {

const std::vector<std::string> constant_builtins{"t4-flat", "m6c", "kodaira-thurston"};

Subspace span(const Geometry& geo, std::initializer_list<const char*> forms, int k = 2)
{
    std::vector<Form> fs;
    for (const char* f : forms)
        fs.push_back(F(geo, f));
    return Subspace::span_forms(k, fs, geo.basis());
}

bool verdict(const std::vector<Verdict>& vs, const std::string& name)
{
    for (const auto& v : vs)
        if (v.name == name)
            return v.value;
    FAIL("missing verdict " << name);
    return false;
}

// One model, its geometry and engine, built once per test case.
struct Fixture {
    explicit Fixture(const std::string& name) : geo(builtin(name)), coh(geo) {}
    Geometry geo;
    Cohomology coh;
};

}  // namespace

TEST_CASE("de Rham groups")
{
    Fixture m6("m6c");
    CHECK(m6.coh.de_rham(2).betti == 5);
    CHECK(m6.coh.de_rham(2).representatives == span(m6.geo, {"a1^b1", "a1^b2", "a2^b1", "a2^b2", "gamma^eta"}));
    CHECK(m6.coh.de_rham(3).betti == 8);
    CHECK(m6.coh.de_rham(1).representatives == span(m6.geo, {"gamma", "eta"}, 1));
    std::vector<std::size_t> betti;
    for (int k = 0; k <= 6; ++k)
        betti.push_back(m6.coh.de_rham(k).betti);
    CHECK(betti == std::vector<std::size_t>{1, 2, 5, 8, 5, 2, 1});

    Fixture flat("t4-flat");
    CHECK(flat.coh.de_rham(2).betti == 6);

    Fixture kt("kodaira-thurston");
    betti.clear();
    for (int k = 0; k <= 4; ++k)
        betti.push_back(kt.coh.de_rham(k).betti);
    CHECK(betti == std::vector<std::size_t>{1, 3, 4, 3, 1});
    CHECK(kt.coh.de_rham(2).representatives == span(kt.geo, {"e1^e2", "e3^e4", "e1^e3", "e2^e4"}));
}

TEST_CASE("closed J-invariant and anti-invariant forms")
{
    Fixture m6("m6c");
    ZJSpaces z = m6.coh.z_j_spaces();
    CHECK(z.z_minus == span(m6.geo, {"a1^b2 - a2^b1"}));
    CHECK(z.z_plus.dim() == 4);
    CHECK(z.z_plus == span(m6.geo, {"a1^b2 + a2^b1", "a1^b1", "a2^b2", "gamma^eta"}));

    Fixture flat("t4-flat");
    CHECK(flat.coh.z_j_spaces().z_minus == span(flat.geo, {"e1^e3 - e2^e4", "e1^e4 + e2^e3"}));
    CHECK(flat.coh.z_j_spaces().z_plus ==
          span(flat.geo, {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3 + e2^e4", "e1^e4 - e2^e3"}));

    // Computed, not the published grouping: e13 and e24 are swapped by J.
    Fixture kt("kodaira-thurston");
    CHECK(kt.coh.z_j_spaces().z_minus == span(kt.geo, {"e1^e3 - e2^e4"}));
    CHECK(kt.coh.z_j_spaces().z_plus == span(kt.geo, {"e1^e2", "e3^e4", "e1^e3 + e2^e4"}));
}

TEST_CASE("harmonic forms")
{
    Fixture kt("kodaira-thurston");
    CHECK(kt.coh.harmonic_spaces().by_degree[2] == span(kt.geo, {"e1^e2", "e3^e4", "e1^e3", "e2^e4"}));

    Fixture flat("t4-flat");
    HarmonicSpaces h = flat.coh.harmonic_spaces();
    REQUIRE(h.anti_self_dual);
    CHECK(*h.anti_self_dual == span(flat.geo, {"e1^e2 - e3^e4", "e1^e3 + e2^e4", "e1^e4 - e2^e3"}));
    CHECK(*h.self_dual == span(flat.geo, {"e1^e2 + e3^e4", "e1^e3 - e2^e4", "e1^e4 + e2^e3"}));

    Fixture m6("m6c");
    CHECK_FALSE(m6.coh.harmonic_spaces().self_dual.has_value());
}

TEST_CASE("ker P_J")
{
    Fixture m6("m6c");
    CHECK(m6.coh.ker_pj() ==
          span(m6.geo, {"a1^b2 - a2^b1", "a1^b2 + a2^b1", "a1^b1 - gamma^eta", "a2^b2 - gamma^eta"}));

    Fixture kt("kodaira-thurston");
    CHECK(kt.coh.ker_pj() == span(kt.geo, {"e1^e2 - e3^e4", "e1^e3", "e2^e4"}));

    Fixture flat("t4-flat");
    CHECK(flat.coh.ker_pj().dim() == 5);
}

TEST_CASE("eigen-split of ker P_J")
{
    Fixture m6("m6c");
    KerPJSplit s = m6.coh.split_ker_pj();
    CHECK(s.minus == span(m6.geo, {"a1^b2 - a2^b1"}));
    CHECK(s.plus_0.dim() == 3);

    Fixture flat("t4-flat");
    CHECK(flat.coh.split_ker_pj().minus.dim() == 2);
    CHECK(flat.coh.split_ker_pj().plus_0.dim() == 3);

    Fixture kt("kodaira-thurston");
    CHECK(kt.coh.split_ker_pj().minus == span(kt.geo, {"e1^e3 - e2^e4"}));
    CHECK(kt.coh.split_ker_pj().plus_0.dim() == 2);
}

TEST_CASE("symplectic harmonic forms")
{
    Fixture kt("kodaira-thurston");
    TsengYau t = kt.coh.tseng_yau_harmonic();
    CHECK(t.d_plus_dlambda == span(kt.geo, {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4", "e2^e3"}));
    CHECK(t.ddlambda == span(kt.geo, {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4", "e1^e4"}));

    Fixture m6("m6c");
    TsengYau tm = m6.coh.tseng_yau_harmonic();
    CHECK(tm.d_plus_dlambda_primitive == m6.coh.ker_pj());
    CHECK(tm.ddlambda_primitive == m6.coh.ker_pj());
}

TEST_CASE("intersection theorem for ker P_J")
{
    // Intersecting the two published rows and dropping omega.
    Fixture kt("kodaira-thurston");
    Subspace both = intersection(span(kt.geo, {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4", "e2^e3"}),
                                 span(kt.geo, {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4", "e1^e4"}));
    CHECK(intersection(both, kt.coh.primitive_subspace(2)) == kt.coh.ker_pj());
    Theorem32Result r = kt.coh.theorem32_check();
    CHECK(verdict(r.verdicts, "theorem32_intersection"));
    CHECK_FALSE(verdict(r.verdicts, "symplectic_primitive_spaces_equal"));
    REQUIRE(r.perp_d_plus_dlambda);
    CHECK(*r.perp_d_plus_dlambda == span(kt.geo, {"e2^e3"}));
    CHECK(*r.perp_ddlambda == span(kt.geo, {"e1^e4"}));
    CHECK(verdict(r.verdicts, "theorem32_perp_star"));

    Fixture m6("m6c");
    Theorem32Result rm = m6.coh.theorem32_check();
    CHECK(verdict(rm.verdicts, "symplectic_primitive_spaces_equal"));
    CHECK(verdict(rm.verdicts, "theorem32_decomposition"));
    CHECK_FALSE(rm.perp_d_plus_dlambda.has_value());

    Fixture flat("t4-flat");
    Theorem32Result rf = flat.coh.theorem32_check();
    REQUIRE(rf.perp_d_plus_dlambda);
    CHECK(rf.perp_d_plus_dlambda->dim() == 0);
    CHECK(rf.perp_ddlambda->dim() == 0);
}

TEST_CASE("pure and full from the kernel dimension")
{
    for (const auto& name : constant_builtins) {
        CAPTURE(name);
        Fixture f(name);
        auto v = f.coh.theorem25_check();
        CHECK(verdict(v, "theorem25_hypothesis"));
        CHECK(verdict(v, "pure"));
        CHECK(verdict(v, "full"));
        CHECK(verdict(v, "theorem25_implication"));
        CHECK(verdict(v, "h2_omega_plus0_minus_decomposition"));
        CHECK(verdict(v, "h2_symplectic_type_decomposition"));
        CHECK(f.coh.ker_pj().dim() + 1 == f.coh.de_rham(2).betti);
    }
}

TEST_CASE("hard Lefschetz")
{
    Fixture m6("m6c");
    auto v = m6.coh.hard_lefschetz();
    CHECK(verdict(v, "hard_lefschetz_k1"));
    CHECK(verdict(v, "hard_lefschetz_k2"));
    CHECK(verdict(v, "hard_lefschetz"));

    Fixture kt("kodaira-thurston");
    CHECK_FALSE(verdict(kt.coh.hard_lefschetz(), "hard_lefschetz"));
    CHECK_FALSE(verdict(kt.coh.hard_lefschetz(), "hard_lefschetz_k1"));

    Fixture flat("t4-flat");
    CHECK(verdict(flat.coh.hard_lefschetz(), "hard_lefschetz"));
}

TEST_CASE("verify on the function-coefficient torus")
{
    Geometry t4m(builtin("t4-m"));
    VerificationResult r1 = verify(t4m, F(t4m, "e1^e3 - m*e2^e4"), Predicate::closed);
    CHECK(r1.holds);
    CHECK(r1.witness.is_zero());

    VerificationResult r2 = verify(t4m, F(t4m, "e1^e4 + m*e2^e3"), Predicate::closed);
    CHECK_FALSE(r2.holds);
    CHECK(r2.witness == F(t4m, "m_4*e2^e3^e4"));

    CHECK(verify(t4m, F(t4m, "e1^e3 - m*e2^e4"), Predicate::j_anti_invariant).holds);
    CHECK(verify(t4m, F(t4m, "e1^e4 + m*e2^e3"), Predicate::j_anti_invariant).holds);
    CHECK_FALSE(verify(t4m, F(t4m, "e1^e2"), Predicate::j_anti_invariant).holds);

    Geometry m6(builtin("m6c"));
    CHECK(verify(m6, F(m6, "gamma^eta"), Predicate::harmonic).holds);

    CHECK_THROWS_AS(Cohomology{t4m}, Error);
}

TEST_CASE("verify needs declared second partials")
{
    ManifoldModel m = parse_manifest(R"(manifold first-order
gen e1 e2 e3 e4
function m m_2 m_4
diff m = m_2*e2 + m_4*e4
metric e1 e1 = 1/m
metric e2 e2 = m
omega = e1^e2 + e3^e4
J e1 = m*e2
J e2 = -1/m*e1
J e3 = e4
J e4 = -e3
)");
    Geometry geo(m);
    CHECK(verify(geo, F(m, "e1^e3 - m*e2^e4"), Predicate::closed).holds);
    // psi_1 is closed and self-dual, so first derivatives suffice for it.
    CHECK(verify(geo, F(m, "e1^e3 - m*e2^e4"), Predicate::harmonic).holds);
    // The Laplacian of psi_2 differentiates d psi_2 = m_4 e2^e3^e4 again.
    try {
        verify(geo, F(m, "e1^e4 + m*e2^e3"), Predicate::in_ker_pj);
        FAIL("expected UndeclaredSymbol");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UndeclaredSymbol);
    }
}

TEST_CASE("false verdicts carry a nonzero witness")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        Geometry geo(builtin(name));
        for (Mask m : geo.basis().degree(2))
            for (Predicate p : all_predicates()) {
                VerificationResult r = verify(geo, Form::monomial(geo.dim(), m), p);
                CHECK(r.holds == r.witness.is_zero());
            }
    }
}

TEST_CASE("verify agrees with the engine's spaces")
{
    for (const auto& name : constant_builtins) {
        CAPTURE(name);
        Fixture f(name);
        for (const auto& a : f.coh.ker_pj().forms(f.geo.basis())) {
            CHECK(verify(f.geo, a, Predicate::in_ker_pj).holds);
            CHECK(verify(f.geo, a, Predicate::harmonic).holds);
            CHECK(verify(f.geo, a, Predicate::primitive).holds);
        }
        TsengYau t = f.coh.tseng_yau_harmonic();
        for (const auto& a : t.d_plus_dlambda.forms(f.geo.basis()))
            CHECK(verify(f.geo, a, Predicate::d_plus_dlambda_harmonic).holds);
        for (const auto& a : t.ddlambda.forms(f.geo.basis()))
            CHECK(verify(f.geo, a, Predicate::ddlambda_harmonic).holds);
        ZJSpaces z = f.coh.z_j_spaces();
        for (const auto& a : z.z_minus.forms(f.geo.basis())) {
            CHECK(j_involution(a, f.geo.model()) == -a);
            CHECK(verify(f.geo, a, Predicate::closed).holds);
        }
        for (const auto& a : z.z_plus.forms(f.geo.basis()))
            CHECK(j_involution(a, f.geo.model()) == a);
    }
}

TEST_CASE("engine invariants on every constant-coefficient builtin")
{
    for (const auto& name : constant_builtins) {
        CAPTURE(name);
        Fixture f(name);
        const auto& basis = f.geo.basis();
        int dim = f.geo.dim();
        HarmonicSpaces h = f.coh.harmonic_spaces();
        for (int k = 0; k <= dim; ++k) {
            CHECK(h.by_degree[k].dim() == f.coh.de_rham(k).betti);
            Subspace closed = f.coh.de_rham(k).closed;
            Subspace coclosed = kernel_within(f.coh.op(OperatorKind::codiff, k), f.coh.whole(k));
            CHECK(h.by_degree[k] == intersection(closed, coclosed));
        }

        Subspace ker = f.coh.ker_pj();
        CHECK(ker == intersection(h.by_degree[2], f.coh.primitive_subspace(2)));
        KerPJSplit s = f.coh.split_ker_pj();
        CHECK(sum(s.minus, s.plus_0) == ker);
        CHECK(intersection(s.minus, s.plus_0).dim() == 0);
        for (const auto& a : s.minus.forms(basis)) {
            CHECK(d(a, f.geo.model()).is_zero());
            CHECK(codifferential(a, f.geo).is_zero());
        }
        for (const auto& a : s.plus_0.forms(basis)) {
            CHECK(d(a, f.geo.model()).is_zero());
            CHECK(codifferential(a, f.geo).is_zero());
        }

        TsengYau t = f.coh.tseng_yau_harmonic();
        CHECK(intersection(t.d_plus_dlambda_primitive, t.ddlambda_primitive) == ker);
        Subspace w = Subspace::span_forms(2, {f.geo.model().omega}, basis);
        CHECK(sum(w, t.d_plus_dlambda_primitive) == t.d_plus_dlambda);
        CHECK(sum(w, t.ddlambda_primitive) == t.ddlambda);
        if (dim == 4) {
            CHECK(map_subspace(f.geo.hodge_matrix(2), t.d_plus_dlambda, 2) == t.ddlambda);
            ZJSpaces z = f.coh.z_j_spaces();
            CHECK(z.h_plus.dim() + z.h_minus.dim() == f.coh.de_rham(2).betti);
            CHECK(z.h_minus.dim() + 1 <= h.self_dual->dim());
        }

        CohomologyReport r = build_report(f.geo);
        CHECK(r.violations().empty());
        for (const auto& v : r.verdicts)
            if (v.invariant)
                CHECK(v.value);
    }
}

TEST_CASE("report contents")
{
    Geometry kt(builtin("kodaira-thurston"));
    CohomologyReport r = build_report(kt);
    CHECK(r.model == "kodaira-thurston");
    CHECK(r.betti == std::vector<std::size_t>{1, 3, 4, 3, 1});
    for (const char* name : {"H^0", "H^1", "H^2", "H^3", "H^4", "Z_J^+", "Z_J^-", "H_J^+", "H_J^-", "H_J0^+",
                             "Harm_g^2", "Harm_g^+", "Harm_g^-", "Harm_J^-", "Harm_J0^+", "ker P_J", "H^2_d+dL",
                             "H^2_ddL", "H^-_d+dL", "H^-_ddL", "H^(1,0)_omega", "H^(0,2)_omega", "perp_d+dL",
                             "perp_ddL"})
        CHECK_NOTHROW(r.space(name));
    CHECK_THROWS(r.space("nonsense"));
    CHECK_FALSE(r.verdict("hard_lefschetz"));
    CHECK(r.notes.size() >= 2);

    Geometry m6(builtin("m6c"));
    CohomologyReport rm = build_report(m6);
    bool generic_note = false;
    for (const auto& n : rm.notes)
        generic_note |= n.find("generic") != std::string::npos;
    CHECK(generic_note);
    CHECK_THROWS(rm.space("Harm_g^+"));
}
