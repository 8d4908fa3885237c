#include "support.hpp"

#include "pcw/error.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace pcw;
using namespace pcw::test;

namespace {

std::string read_data(const std::string& file)
{
    std::ifstream in(std::string(PCW_DATA_DIR) + "/" + file);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* const flat_text = R"(manifold flat
gen e1 e2 e3 e4
omega = e1^e2 + e3^e4
J e1 = e2
J e2 = -e1
J e3 = e4
J e4 = -e3
)";

// Kind and position of the ParseError thrown by parse_manifest.
struct Failure {
    ErrorKind kind;
    int line;
    int column;
    std::string what;
};

Failure manifest_failure(const std::string& text)
{
    try {
        parse_manifest(text);
    } catch (const ParseError& e) {
        return {e.kind(), e.line(), e.column(), e.what()};
    }
    FAIL("manifest parsed without error");
    return {};
}

ErrorKind form_failure(const ManifoldModel& m, const std::string& text)
{
    try {
        parse_form(text, m);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("'" << text << "' parsed without error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("shipped manifests")
{
    CHECK(parse_manifest(read_data("m6c.manifest")) == builtin("m6c"));
    ManifoldModel printed = parse_manifest(read_data("m6c-as-printed.manifest"));
    CHECK(printed == m6c_as_printed());
    CHECK_FALSE(validate(printed).passed());
}

TEST_CASE("serialization round trip")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        ManifoldModel m = builtin(name);
        CHECK(parse_manifest(serialize_manifest(m)) == m);
    }
    CHECK(parse_manifest(serialize_manifest(m6c_as_printed())) == m6c_as_printed());
}

TEST_CASE("a generator wedged with itself is zero")
{
    std::string text = std::string(flat_text) + "d e1 = e1^e1\n";
    ManifoldModel m = parse_manifest(text);
    CHECK(m.structure[0].is_zero());
    CHECK(validate(m).passed());
}

TEST_CASE("missing sections")
{
    for (const char* section : {"omega", "gen", "manifold"}) {
        CAPTURE(section);
        std::string text;
        std::istringstream in(flat_text);
        for (std::string line; std::getline(in, line);)
            if (line.rfind(section, 0) != 0)
                text += line + "\n";
        if (std::string(section) == "gen")
            text = "manifold x\n";
        Failure f = manifest_failure(text);
        CHECK(f.kind == ErrorKind::ParseError);
        CHECK(f.what.find("missing required section") != std::string::npos);
    }
    Failure no_omega = manifest_failure("manifold x\ngen e1 e2\nJ e1 = e2\nJ e2 = -e1\n");
    CHECK(no_omega.what.find("'omega'") != std::string::npos);
    CHECK(no_omega.line == 5);
    CHECK(no_omega.column == 1);
}

TEST_CASE("declaration errors")
{
    std::string base(flat_text);
    CHECK(manifest_failure(base + "omega = e1^e2 + e3^e4\n").kind == ErrorKind::DuplicateDeclaration);
    CHECK(manifest_failure(base + "J e1 = e2\n").kind == ErrorKind::DuplicateDeclaration);
    CHECK(manifest_failure(base + "param e1\n").kind == ErrorKind::DuplicateDeclaration);
    CHECK(manifest_failure(base + "param c\nparam c\n").kind == ErrorKind::DuplicateDeclaration);
    CHECK(manifest_failure(base + "d e1 = e1^e2\nd e1 = e1^e3\n").kind == ErrorKind::DuplicateDeclaration);

    Failure unknown = manifest_failure(base + "d e1 = e1^x9\n");
    CHECK(unknown.kind == ErrorKind::UnknownGenerator);
    CHECK(unknown.line == 8);
    CHECK(unknown.column == 11);
    CHECK(manifest_failure(base + "J x1 = e2\n").kind == ErrorKind::UnknownGenerator);

    Failure bad = manifest_failure(base + "frobnicate e1\n");
    CHECK(bad.kind == ErrorKind::ParseError);
    CHECK(bad.line == 8);
    CHECK(manifest_failure(base + "dim 6\n").kind == ErrorKind::ParseError);
    CHECK(manifest_failure(base + "omega e1^e2\n").kind != ErrorKind::DivisionByZero);
}

TEST_CASE("comments, parameters, functions and metric entries")
{
    ManifoldModel m = parse_manifest(R"(# torus with a conformal factor
manifold t4-m-copy
dim 4   # four generators
gen e1 e2 e3 e4
function m m_2 m_4
function m_22 m_24 m_44
diff m = m_2*e2 + m_4*e4
diff m_2 = m_22*e2 + m_24*e4
diff m_4 = m_24*e2 + m_44*e4
metric 1 1 = 1/m
metric e2 e2 = m
omega = e1^e2 + e3^e4
J e1 = m*e2
J e2 = -1/m*e1
J e3 = e4
J e4 = -e3
)");
    ManifoldModel ref = builtin("t4-m");
    m.name = ref.name;
    CHECK(m == ref);
    CHECK(validate(m).passed());
}

TEST_CASE("off-diagonal metric entries are symmetric")
{
    ManifoldModel m = parse_manifest(std::string(flat_text) + "param c\nmetric e1 e3 = c\n");
    CHECK(m.metric(0, 2) == S(m, "c"));
    CHECK(m.metric(2, 0) == S(m, "c"));
}

TEST_CASE("expression grammar")
{
    ManifoldModel m6 = builtin("m6c");
    ManifoldModel t4m = builtin("t4-m");

    CHECK(F(m6, "a1^b2 - a2^b1") == wedge(F(m6, "a1"), F(m6, "b2")) - wedge(F(m6, "a2"), F(m6, "b1")));
    // '^' binds tighter than '+', and '*' shares its level.
    CHECK(F(m6, "2*a1^b1 + gamma^eta") == Scalar(2) * F(m6, "a1^b1") + F(m6, "gamma^eta"));
    CHECK(F(m6, "c*a1^b1") == wedge(F(m6, "c*a1"), F(m6, "b1")));
    CHECK(F(m6, "-a1^b1") == -F(m6, "a1^b1"));
    CHECK(F(m6, "3/4*a1") == Scalar(mpq_class(3, 4)) * F(m6, "a1"));
    CHECK(F(m6, "a1/2") == Scalar(mpq_class(1, 2)) * F(m6, "a1"));
    CHECK(S(m6, "c**2") == S(m6, "c") * S(m6, "c"));
    CHECK(S(m6, "c**-1") == Scalar(1) / S(m6, "c"));
    CHECK(S(m6, "-c**2") == -(S(m6, "c") * S(m6, "c")));
    CHECK(S(m6, "2**3") == Scalar(8));

    Form table = F(t4m, "(1/(1+m))*(e1^e2 - e3^e4 + e1^e4 - m*e2^e3)");
    Scalar f = Scalar(1) / (1 + S(t4m, "m"));
    CHECK(table.coefficient(0b0011) == f);
    CHECK(table.coefficient(0b1100) == -f);
    CHECK(table.coefficient(0b1001) == f);
    CHECK(table.coefficient(0b0110) == -S(t4m, "m") * f);

    CHECK(form_failure(m6, "a1*b1") == ErrorKind::ParseError);
    CHECK(form_failure(m6, "c/a1") == ErrorKind::ParseError);
    CHECK(form_failure(m6, "a1 +") == ErrorKind::ParseError);
    CHECK(form_failure(m6, "(a1") == ErrorKind::ParseError);
    CHECK(form_failure(m6, "a1**2") == ErrorKind::ParseError);
    CHECK(form_failure(m6, "zeta") == ErrorKind::UnknownGenerator);
    CHECK_THROWS_AS(parse_form("a1/0", m6), Error);
}

TEST_CASE("printing reparses to the same form")
{
    for (const auto& name : builtin_names()) {
        Geometry geo(builtin(name));
        const auto& m = geo.model();
        for (int k = 0; k <= m.dim; ++k)
            for (Mask mask : geo.basis().degree(k)) {
                Form a = hodge_star(Form::monomial(m.dim, mask), geo);
                CHECK(F(m, m.format(a)) == a);
            }
    }
    ManifoldModel t4m = builtin("t4-m");
    Form f = F(t4m, "(1/(1-m))*(e1^e2 + e3^e4) + m_4**2/(m+2)*e1^e3");
    CHECK(F(t4m, t4m.format(f)) == f);
}

TEST_CASE("error positions inside expressions")
{
    ManifoldModel m6 = builtin("m6c");
    try {
        parse_form("a1 + zeta", m6);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ErrorKind::UnknownGenerator);
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
}
