#pragma once

#include "pcw/forms.hpp"
#include "pcw/linalg.hpp"
#include "pcw/scalar.hpp"

#include <string>
#include <vector>

namespace pcw {

/// An almost-Kahler invariant-form complex: a coframe e_1..e_2n with its
/// structure equations, coefficient symbols, the metric Gram matrix
/// g(E_i, E_j) on the dual frame, the symplectic form and J.
///
/// J is stored as it acts on the coframe: row i holds the coefficients of
/// J(e_i). Compatibility reads g = -W * J, where W is the antisymmetric
/// coefficient matrix of omega (W(i,j) is the coefficient of e_i ^ e_j).
struct ManifoldModel {
    std::string name;
    int dim = 0;
    std::vector<std::string> generators;
    /// structure[i] = d(e_i), a degree-2 form (possibly zero).
    std::vector<Form> structure;
    SymbolTable symbols;
    Matrix metric;
    Form omega;
    Matrix j_matrix;

    int half_dim() const { return dim / 2; }
    /// True when a function symbol enters the structure equations, metric, omega or J.
    bool has_function_coefficients() const;
    std::optional<int> generator_index(const std::string& name) const;
    std::string format(const Form& f) const { return f.to_string(generators, symbols.names()); }
    std::string format(const Scalar& s) const { return s.to_string(symbols.names()); }

    bool operator==(const ManifoldModel& other) const;
};

/// Antisymmetric coefficient matrix of a 2-form.
Matrix two_form_matrix(const Form& f);

struct ModelCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct ModelVerdict {
    std::vector<ModelCheck> checks;
    bool passed() const;
    const ModelCheck* find(const std::string& name) const;
};

/// Checks d^2 = 0 on generators, d omega = 0, omega^n != 0, J^2 = -1,
/// metric symmetry and invertibility, g = omega(., J.), g(omega, omega) = n
/// and det g = (omega^n/n!)^2. Every failure is reported with a witness.
ModelVerdict validate(const ManifoldModel& model);

/// Builtin names: t4-flat, t4-m, m6c, kodaira-thurston.
std::vector<std::string> builtin_names();
/// Throws UnknownBuiltin.
ManifoldModel builtin(const std::string& name);
/// M^6(c) with both structure equations carrying -c, as printed in the source
/// example; fails validation because d omega != 0.
ManifoldModel m6c_as_printed();

}  // namespace pcw
