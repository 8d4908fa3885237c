#pragma once

#include "pcw/forms.hpp"
#include "pcw/model.hpp"

namespace pcw {

enum class StarKind { metric, symplectic };

/// Star operator by direct index summation over all k-tuples with a
/// Levi-Civita symbol. Shares no code with Geometry; it exists to cross-check
/// the Gram-solve stars. Throws DimensionTooLarge beyond 6 generators,
/// MixedDegree for inhomogeneous input.
Form oracle_star(const Form& a, const ManifoldModel& model, StarKind which);

struct OracleMismatch {
    StarKind which;
    Form input;
    Form expected;  // oracle
    Form actual;    // Geometry
};

/// Compares both stars with the oracle on every basis form of every degree.
std::vector<OracleMismatch> oracle_check(const ManifoldModel& model);

}  // namespace pcw
