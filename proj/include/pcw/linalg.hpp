#pragma once

#include "pcw/forms.hpp"
#include "pcw/scalar.hpp"

#include <vector>

namespace pcw {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the coefficient field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    Matrix reduced;
    /// Pivot column of each nonzero row, increasing.
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form; pivots are taken in
/// column order, so the result is unique.
EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Null space basis: one vector per free column.
std::vector<Vector> null_space(const Matrix& m);
/// Solves a * x = b for invertible square a. Throws DivisionByZero when singular.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);
Scalar determinant(Matrix m);

Scalar dot(const Vector& a, const Vector& b);
/// a^T g b.
Scalar bilinear(const Vector& a, const Matrix& g, const Vector& b);

/// Subspace of the degree-k piece of the exterior algebra, stored as the
/// nonzero rows of its reduced row echelon form in GradedBasis coordinates.
/// Equal subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    Subspace(int dimension, int degree) : dim_(dimension), degree_(degree) {}
    static Subspace span(int dimension, int degree, const std::vector<Vector>& vectors);
    static Subspace span_forms(int degree, const std::vector<Form>& forms, const GradedBasis& basis);
    static Subspace whole(int dimension, int degree, std::size_t ambient_size);

    int dimension() const { return dim_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_size() const;
    const std::vector<Vector>& basis() const { return rows_; }
    std::vector<Form> forms(const GradedBasis& basis) const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    friend Subspace sum(const Subspace&, const Subspace&);
    int dim_ = 0;
    int degree_ = 0;
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
};

/// Throw AmbientMismatch when the ambient degrees differ.
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// {x in within : m x = 0}.
Subspace kernel_within(const Matrix& m, const Subspace& within);
/// Orthogonal complement of `s` inside `within` for the bilinear form `gram`.
Subspace orthogonal_complement(const Subspace& s, const Subspace& within, const Matrix& gram);
/// Image of the subspace under a linear map into degree `target_degree`.
Subspace map_subspace(const Matrix& m, const Subspace& s, int target_degree);

}  // namespace pcw
