#include "cli.hpp"

#include "pcw/cohomology.hpp"
#include "pcw/error.hpp"
#include "pcw/parse.hpp"

#include <iomanip>
#include <iostream>

namespace pcw::cli {

namespace {

struct Row {
    const char* label;
    const char* space;  // report space name
    std::vector<const char*> forms;
};

const std::vector<Row>& rows_for(const std::string& name)
{
    static const std::vector<Row> flat{
        {"Z_J0^+", "Z_J^+", {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3 + e2^e4", "e1^e4 - e2^e3"}},
        {"Z_J0^-", "Z_J^-", {"e1^e3 - e2^e4", "e1^e4 + e2^e3"}},
        {"ker P_J0", "ker P_J",
         {"e1^e2 - e3^e4", "e1^e3 + e2^e4", "e1^e4 - e2^e3", "e1^e3 - e2^e4", "e1^e4 + e2^e3"}},
        {"H_g0^+", "Harm_g^+", {"e1^e2 + e3^e4", "e1^e3 - e2^e4", "e1^e4 + e2^e3"}},
        {"H_g0^-", "Harm_g^-", {"e1^e2 - e3^e4", "e1^e3 + e2^e4", "e1^e4 - e2^e3"}},
    };
    static const std::vector<Row> m6c{
        {"H^2_dR", "H^2", {"a1^b1", "a1^b2", "a2^b1", "a2^b2", "gamma^eta"}},
        {"Z_J^+", "Z_J^+", {"a1^b2 + a2^b1", "a1^b1", "a2^b2", "gamma^eta"}},
        {"Z_J^-", "Z_J^-", {"a1^b2 - a2^b1"}},
        {"H^-_d+dL", "H^-_d+dL", {"a1^b2 - a2^b1", "a1^b2 + a2^b1", "a1^b1 - gamma^eta", "a2^b2 - gamma^eta"}},
        {"H^-_ddL", "H^-_ddL", {"a1^b2 - a2^b1", "a1^b2 + a2^b1", "a1^b1 - gamma^eta", "a2^b2 - gamma^eta"}},
        {"ker P_J", "ker P_J", {"a1^b2 - a2^b1", "a1^b2 + a2^b1", "a1^b1 - gamma^eta", "a2^b2 - gamma^eta"}},
    };
    static const std::vector<Row> kt{
        {"H^2_dR", "H^2", {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4"}},
        {"Z_J^+", "Z_J^+", {"e1^e2 + e3^e4", "e1^e2 - e3^e4"}},
        {"Z_J^-", "Z_J^-", {"e1^e3", "e2^e4"}},
        {"H^2_d+dL", "H^2_d+dL", {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4", "e2^e3"}},
        {"H^2_ddL", "H^2_ddL", {"e1^e2 + e3^e4", "e1^e2 - e3^e4", "e1^e3", "e2^e4", "e1^e4"}},
        {"ker P_J", "ker P_J", {"e1^e2 - e3^e4", "e1^e3", "e2^e4"}},
    };
    static const std::vector<Row> none;
    if (name == "t4-flat")
        return flat;
    if (name == "m6c")
        return m6c;
    if (name == "kodaira-thurston")
        return kt;
    return none;
}

// Rows of the function-coefficient torus, checked pointwise.
struct Entry {
    const char* row;
    const char* form;
    std::vector<Predicate> predicates;
};

const std::vector<Entry>& t4m_entries()
{
    using P = Predicate;
    static const std::vector<Entry> e{
        {"Z_J^+", "e1^e2 + e3^e4", {P::closed, P::j_invariant}},
        {"Z_J^+", "e1^e2 - e3^e4", {P::closed, P::j_invariant}},
        {"Z_J^+", "e1^e3 + m*e2^e4", {P::closed, P::j_invariant}},
        {"Z_J^+", "(1/(1+m))*(e1^e2 - e3^e4 + e1^e4 - m*e2^e3)", {P::closed, P::j_invariant}},
        {"Z_J^+", "(1/(1-m))*(e1^e2 + e3^e4 + e1^e4 - m*e2^e3)", {P::closed, P::j_invariant}},
        {"Z_J^-", "e1^e3 - m*e2^e4", {P::closed, P::j_anti_invariant}},
        {"ker P_J", "e1^e3 - m*e2^e4", {P::in_ker_pj}},
        {"ker P_J", "e1^e2 - e3^e4", {P::in_ker_pj}},
        {"ker P_J", "e1^e3 + m*e2^e4", {P::in_ker_pj}},
        {"ker P_J", "(1/(1+m))*(e1^e2 - e3^e4 + e1^e4 - m*e2^e3)", {P::in_ker_pj}},
        {"H_g^+", "e1^e2 + e3^e4", {P::harmonic}},
        {"H_g^+", "e1^e3 - m*e2^e4", {P::harmonic}},
        {"H_g^+", "(1/(1+m))*(e1^e2 + e3^e4 + e1^e4 + m*e2^e3)", {P::harmonic}},
        {"H_g^-", "e1^e2 - e3^e4", {P::harmonic}},
        {"H_g^-", "e1^e3 + m*e2^e4", {P::harmonic}},
        {"H_g^-", "(1/(1+m))*(e1^e2 - e3^e4 + e1^e4 - m*e2^e3)", {P::harmonic}},
        {"psi_2", "e1^e4 + m*e2^e3", {P::closed, P::j_anti_invariant}},
    };
    return e;
}

// The torus metric with m depending on x2 + x4 only, so m_2 = m_4 and all
// second partials agree.
const char* const diagonal_manifest = R"(manifold t4-m-diagonal
gen e1 e2 e3 e4
function m m_2 m_22
diff m = m_2*e2 + m_2*e4
diff m_2 = m_22*e2 + m_22*e4
metric e1 e1 = 1/m
metric e2 e2 = m
omega = e1^e2 + e3^e4
J e1 = m*e2
J e2 = -1/m*e1
J e3 = e4
J e4 = -e3
)";

std::string outcome(const Geometry& geo, const char* form, Predicate p, std::string& witness)
{
    try {
        VerificationResult r = verify(geo, parse_form(form, geo.model()), p);
        if (!r.holds)
            witness = geo.model().format(r.witness);
        return r.holds ? "true" : "false";
    } catch (const Error& err) {
        witness = std::string(to_string(err.kind())) + ": " + err.what();
        return "undecided";
    }
}

int render_t4m(std::ostream& out)
{
    Geometry generic(builtin("t4-m"));
    Geometry diagonal(parse_manifest(diagonal_manifest));
    out << "t4-m: reference rows checked pointwise (function coefficients)\n";
    out << "columns: generic m, and m = m(x2 + x4) (m_2 = m_4)\n\n";
    out << std::left << std::setw(10) << "row" << std::setw(48) << "form" << std::setw(18) << "predicate"
        << std::setw(10) << "generic" << "m(x2+x4)\n";
    std::vector<std::string> witnesses;
    for (const auto& e : t4m_entries()) {
        for (Predicate p : e.predicates) {
            std::string w1, w2;
            std::string r1 = outcome(generic, e.form, p, w1);
            std::string r2 = outcome(diagonal, e.form, p, w2);
            out << std::left << std::setw(10) << e.row << std::setw(48) << e.form << std::setw(18) << to_string(p)
                << std::setw(10) << r1 << r2;
            if (!w1.empty()) {
                witnesses.push_back("[" + std::to_string(witnesses.size() + 1) + "] generic: " + w1);
                out << "  [" << witnesses.size() << "]";
            }
            if (!w2.empty()) {
                witnesses.push_back("[" + std::to_string(witnesses.size() + 1) + "] m(x2+x4): " + w2);
                out << "  [" << witnesses.size() << "]";
            }
            out << "\n";
        }
    }
    if (!witnesses.empty())
        out << "\nwitnesses\n";
    for (const auto& w : witnesses)
        out << "  " << w << "\n";
    out << "\nnote: the entry with 1/(1-m) is a formal element of the fraction field; it is singular wherever m = 1.\n";
    out << "note: coefficients are functions, so only pointwise predicates apply; invariant-complex spaces are not "
           "computed for this model.\n";
    return exit_ok;
}

}  // namespace

int render_tables(const std::string& name, std::ostream& out)
{
    if (name == "t4-m")
        return render_t4m(out);
    ManifoldModel m = builtin(name);
    Geometry geo(m);
    CohomologyReport r = build_report(geo);
    out << name << ": computed spaces against the reference rows\n\n";
    out << std::left << std::setw(12) << "row" << std::setw(10) << "expected" << std::setw(10) << "computed"
        << "span\n";
    for (const auto& row : rows_for(name)) {
        std::vector<Form> forms;
        for (const char* f : row.forms)
            forms.push_back(parse_form(f, m));
        Subspace expected = Subspace::span_forms(2, forms, geo.basis());
        const Subspace& computed = r.space(row.space);
        bool same = expected == computed;
        out << std::left << std::setw(12) << row.label << std::setw(10) << expected.dim() << std::setw(10)
            << computed.dim() << (same ? "equal" : "differs") << "\n";
        if (!same) {
            out << "    computed basis:";
            for (const auto& f : computed.forms(geo.basis()))
                out << "  " << m.format(f);
            out << "\n";
        }
    }
    out << "\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
    auto bad = r.violations();
    for (const auto& b : bad)
        out << "invariant violated: " << b << "\n";
    return bad.empty() ? exit_ok : exit_invariant;
}

}  // namespace pcw::cli
