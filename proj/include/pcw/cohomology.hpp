#pragma once

#include "pcw/linalg.hpp"
#include "pcw/operators.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcw {

/// Closed and exact k-forms of the invariant complex, and the
/// representatives of H^k chosen Gram-orthogonal to the exact forms.
struct DeRhamGroup {
    std::size_t betti = 0;
    Subspace closed;
    Subspace exact;
    Subspace representatives;
};

struct ZJSpaces {
    Subspace z_plus;
    Subspace z_minus;
    /// Images in H^2, as subspaces of harmonic representatives.
    Subspace h_plus;
    Subspace h_minus;
    Subspace h_plus_0;
};

struct HarmonicSpaces {
    /// Indexed by degree.
    std::vector<Subspace> by_degree;
    /// Self-dual and anti-self-dual parts of degree 2; only set in dimension 4.
    std::optional<Subspace> self_dual;
    std::optional<Subspace> anti_self_dual;
};

struct KerPJSplit {
    Subspace minus;   // harmonic J-anti-invariant
    Subspace plus_0;  // harmonic primitive J-invariant
};

struct TsengYau {
    Subspace d_plus_dlambda;
    Subspace ddlambda;
    Subspace d_plus_dlambda_primitive;
    Subspace ddlambda_primitive;
};

/// A named boolean outcome. Invariant verdicts restate proven identities, so
/// a false one points at a bug; the others are properties of the model.
struct Verdict {
    std::string name;
    bool value = false;
    bool invariant = false;
};

struct Theorem32Result {
    std::vector<Verdict> verdicts;
    /// Only set in dimension 4.
    std::optional<Subspace> perp_d_plus_dlambda;
    std::optional<Subspace> perp_ddlambda;
};

struct NamedSpace {
    std::string name;
    Subspace space;
};

struct CohomologyReport {
    std::string model;
    std::vector<std::size_t> betti;
    std::vector<NamedSpace> spaces;
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes;

    /// Throws std::out_of_range for an unknown name.
    const Subspace& space(const std::string& name) const;
    bool verdict(const std::string& name) const;
    /// Names of invariant verdicts that came out false.
    std::vector<std::string> violations() const;
};

/// Engine over one constant-coefficient model. Assembled operator matrices
/// and de Rham groups are cached, so one instance should serve a whole report.
/// Not thread-safe.
class Cohomology {
public:
    /// Throws FunctionCoefficientModel.
    explicit Cohomology(const Geometry& geo);

    const Geometry& geometry() const { return geo_; }

    const DeRhamGroup& de_rham(int k) const;
    ZJSpaces z_j_spaces() const;
    HarmonicSpaces harmonic_spaces() const;
    /// Asserts the operator kernel equals primitive harmonic forms; throws InvariantViolation.
    Subspace ker_pj() const;
    /// Throws SplitFailure when the eigen-split of ker P_J misbehaves.
    KerPJSplit split_ker_pj() const;
    /// Throws InvariantViolation unless both spaces decompose as span{omega} + primitive part.
    TsengYau tseng_yau_harmonic() const;
    Theorem32Result theorem32_check() const;
    std::vector<Verdict> theorem25_check() const;
    /// One verdict per k < n, then an overall "hard_lefschetz" verdict.
    std::vector<Verdict> hard_lefschetz() const;

    /// Representative of the class of a closed k-form: its Gram-orthogonal
    /// projection away from the exact forms.
    Vector harmonic_part(const Vector& closed, int k) const;
    /// Class images of a subspace of closed forms, as representatives.
    Subspace to_cohomology(const Subspace& closed) const;

    const Matrix& op(OperatorKind kind, int k) const;
    Subspace primitive_subspace(int k) const;
    /// (+1 or -1)-eigenspace of j_involution on 2-forms.
    Subspace j_eigenspace(int sign) const;
    Subspace whole(int k) const;

private:
    Subspace kernel(OperatorKind kind, int k, const Subspace& within) const;

    const Geometry& geo_;
    mutable std::map<std::pair<OperatorKind, int>, Matrix> ops_;
    mutable std::map<int, DeRhamGroup> groups_;
};

/// Throws FunctionCoefficientModel, SplitFailure or InvariantViolation.
CohomologyReport build_report(const Geometry& geo);

enum class Predicate {
    closed,
    coclosed,
    harmonic,
    primitive,
    j_anti_invariant,
    j_invariant,
    in_ker_pj,
    d_plus_dlambda_harmonic,
    ddlambda_harmonic,
};

std::string_view to_string(Predicate p);
std::optional<Predicate> predicate_from_string(std::string_view s);
std::vector<Predicate> all_predicates();

struct VerificationResult {
    Predicate predicate;
    Form input;
    bool holds = false;
    /// Nonzero obstruction whenever holds is false.
    Form witness;
};

/// Pointwise check by exact vanishing; works on function-coefficient models.
/// Throws UndeclaredSymbol when a needed derivative is not declared.
VerificationResult verify(const Geometry& geo, const Form& form, Predicate predicate);

}  // namespace pcw
