#include "cli.hpp"

#include "pcw/cohomology.hpp"
#include "pcw/error.hpp"
#include "pcw/oracle.hpp"
#include "pcw/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace pcw::cli {

namespace {

using json = nlohmann::ordered_json;

int max_dim()
{
    const char* env = std::getenv("PCW_MAX_DIM");
    if (!env || !*env)
        return 8;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v > 0)
            return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ParseError, std::string("PCW_MAX_DIM must be a positive integer, got '") + env + "'");
}

ManifoldModel load_checked(const std::string& source)
{
    ManifoldModel m = load_model(source);
    int limit = max_dim();
    if (m.dim > limit)
        throw Error(ErrorKind::DimensionTooLarge, "model dimension " + std::to_string(m.dim) +
                                                      " exceeds PCW_MAX_DIM=" + std::to_string(limit));
    return m;
}

// Prints the verdict and returns false when validation fails.
bool print_validation(const ManifoldModel& m, std::ostream& out, bool verbose)
{
    ModelVerdict v = validate(m);
    for (const auto& c : v.checks) {
        if (!verbose && c.passed)
            continue;
        out << std::left << std::setw(20) << c.name << (c.passed ? "pass" : "FAIL");
        if (!c.passed)
            out << "  " << c.witness;
        out << "\n";
    }
    if (!v.passed())
        out << "model '" << m.name << "' failed validation\n";
    return v.passed();
}

std::vector<std::string> basis_strings(const Subspace& s, const Geometry& geo)
{
    std::vector<std::string> out;
    for (const auto& f : s.forms(geo.basis()))
        out.push_back(geo.model().format(f));
    return out;
}

json report_json(const CohomologyReport& r, const Geometry& geo)
{
    json j;
    j["model"] = r.model;
    j["betti"] = r.betti;
    j["spaces"] = json::array();
    for (const auto& s : r.spaces)
        j["spaces"].push_back({{"name", s.name}, {"dim", s.space.dim()}, {"basis", basis_strings(s.space, geo)}});
    j["verdicts"] = json::object();
    for (const auto& v : r.verdicts)
        j["verdicts"][v.name] = v.value;
    j["notes"] = r.notes;
    return j;
}

void report_text(const CohomologyReport& r, const Geometry& geo, std::ostream& out)
{
    out << "model " << r.model << "\n";
    out << "betti";
    for (auto b : r.betti)
        out << " " << b;
    out << "\n\n";
    std::size_t width = 0;
    for (const auto& s : r.spaces)
        width = std::max(width, s.name.size());
    for (const auto& s : r.spaces) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << s.name << std::setw(4) << s.space.dim();
        auto basis = basis_strings(s.space, geo);
        for (std::size_t i = 0; i < basis.size(); ++i)
            out << (i ? ",  " : "") << basis[i];
        out << "\n";
    }
    out << "\n";
    width = 0;
    for (const auto& v : r.verdicts)
        width = std::max(width, v.name.size());
    for (const auto& v : r.verdicts)
        out << std::left << std::setw(static_cast<int>(width) + 2) << v.name << (v.value ? "true" : "false") << "\n";
    if (!r.notes.empty())
        out << "\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
}

int cmd_validate(const std::string& source, std::ostream& out)
{
    ManifoldModel m = load_checked(source);
    bool ok = print_validation(m, out, true);
    if (ok)
        out << "model '" << m.name << "' is a valid almost-Kahler model\n";
    return ok ? exit_ok : exit_validation;
}

int cmd_report(const std::string& source, bool as_json, std::ostream& out, std::ostream& err)
{
    ManifoldModel m = load_checked(source);
    if (!print_validation(m, err, false))
        return exit_validation;
    Geometry geo(m);
    CohomologyReport r = build_report(geo);
    if (as_json)
        out << report_json(r, geo).dump(2) << "\n";
    else
        report_text(r, geo, out);
    auto bad = r.violations();
    if (!bad.empty()) {
        for (const auto& b : bad)
            err << "invariant violated: " << b << "\n";
        return exit_invariant;
    }
    return exit_ok;
}

int cmd_verify(const std::string& source, const std::string& form, const std::string& pred, std::ostream& out,
               std::ostream& err)
{
    ManifoldModel m = load_checked(source);
    if (!print_validation(m, err, false))
        return exit_validation;
    auto p = predicate_from_string(pred);
    if (!p)
        throw Error(ErrorKind::ParseError, "unknown predicate '" + pred + "'");
    Geometry geo(m);
    Form f = parse_form(form, m);
    VerificationResult r = verify(geo, f, *p);
    out << to_string(r.predicate) << "(" << m.format(r.input) << ") = " << (r.holds ? "true" : "false");
    if (!r.holds)
        out << "\nwitness: " << m.format(r.witness);
    out << "\n";
    return exit_ok;
}

int cmd_oracle(const std::string& source, std::ostream& out, std::ostream& err)
{
    ManifoldModel m = load_checked(source);
    auto mismatches = oracle_check(m);
    GradedBasis basis(m.dim);
    std::size_t forms = 0;
    for (int k = 0; k <= m.dim; ++k)
        forms += basis.size(k);
    for (const auto& mm : mismatches)
        err << (mm.which == StarKind::metric ? "*_g(" : "*_s(") << m.format(mm.input)
            << "): oracle " << m.format(mm.expected) << ", main " << m.format(mm.actual) << "\n";
    out << m.name << ": " << forms << " basis forms, both stars, " << mismatches.size() << " mismatches\n";
    return mismatches.empty() ? exit_ok : exit_invariant;
}

int exit_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::SplitFailure:
    case ErrorKind::InvariantViolation: return exit_invariant;
    default: return exit_usage;
    }
}

}  // namespace

ManifoldModel load_model(const std::string& source)
{
    auto names = builtin_names();
    if (std::find(names.begin(), names.end(), source) != names.end())
        return builtin(source);
    std::ifstream in(source);
    if (!in)
        throw Error(ErrorKind::UnknownBuiltin, "'" + source + "' is neither a builtin model nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Almost-Kahler cohomology workbench"};
    app.name("pcw");
    app.require_subcommand(1);

    std::string source, form, pred;
    bool as_json = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the almost-Kahler identities of a model");
    validate_cmd->add_option("model", source, "builtin name or manifest path")->required();

    auto* report_cmd = app.add_subcommand("report", "Compute every cohomology space and verdict");
    report_cmd->add_option("model", source, "builtin name or manifest path")->required();
    report_cmd->add_flag("--json", as_json, "emit JSON");

    auto* tables_cmd = app.add_subcommand("tables", "Compare computed spaces with the reference tables");
    tables_cmd->add_option("builtin", source, "builtin name")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Test one predicate on one form");
    verify_cmd->add_option("model", source, "builtin name or manifest path")->required();
    verify_cmd->add_option("--form", form, "form expression")->required();
    std::vector<std::string> pred_names;
    for (auto p : all_predicates())
        pred_names.emplace_back(to_string(p));
    verify_cmd->add_option("--pred", pred, "predicate")->required()->check(CLI::IsMember(pred_names));

    auto* list_cmd = app.add_subcommand("list-builtins", "List builtin models");

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check both stars against brute-force index sums");
    oracle_cmd->add_option("model", source, "builtin name or manifest path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(source, out);
        if (*report_cmd)
            return cmd_report(source, as_json, out, err);
        if (*tables_cmd) {
            auto names = builtin_names();
            if (std::find(names.begin(), names.end(), source) == names.end())
                throw Error(ErrorKind::UnknownBuiltin, "tables needs a builtin model, got '" + source + "'");
            return render_tables(source, out);
        }
        if (*verify_cmd)
            return cmd_verify(source, form, pred, out, err);
        if (*list_cmd) {
            for (const auto& n : builtin_names())
                out << n << "\n";
            return exit_ok;
        }
        if (*oracle_cmd)
            return cmd_oracle(source, out, err);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_for(e);
    }
    return exit_usage;
}

}  // namespace pcw::cli
