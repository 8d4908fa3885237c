#include "pcw/linalg.hpp"

#include "pcw/error.hpp"

#include <utility>

namespace pcw {

namespace {

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    Vector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero())
                r[i] += a(i, k) * v[k];
    return r;
}

Matrix operator*(const Scalar& s, Matrix m)
{
    for (auto& x : m.data_)
        x *= s;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    Matrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    Matrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] -= b.data_[i];
    return r;
}

EchelonForm row_reduce(Matrix m)
{
    EchelonForm out;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
        std::size_t r = prow;
        while (r < m.rows() && m(r, col).is_zero())
            ++r;
        if (r == m.rows())
            continue;
        if (r != prow)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(r, c), m(prow, c));
        Scalar inv = m(prow, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(prow, c).is_zero())
                m(prow, c) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == prow || m(i, col).is_zero())
                continue;
            Scalar f = m(i, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(prow, c).is_zero())
                    m(i, c) -= f * m(prow, c);
        }
        out.pivots.push_back(col);
        ++prow;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> null_space(const Matrix& m)
{
    auto ef = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ef.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < ef.pivots.size(); ++i)
            v[ef.pivots[i]] = -ef.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix solve(const Matrix& a, const Matrix& b)
{
    std::size_t n = a.rows();
    Matrix aug(n, n + b.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            aug(r, n + c) = b(r, c);
    }
    auto ef = row_reduce(std::move(aug));
    if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1)
        throw Error(ErrorKind::DivisionByZero, "singular matrix in solve");
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(r, c) = ef.reduced(r, n + c);
    return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

Scalar determinant(Matrix m)
{
    std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && m(r, col).is_zero())
            ++r;
        if (r == n)
            return Scalar();
        if (r != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(r, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        Scalar inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero())
                continue;
            Scalar f = m(i, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                m(i, c) -= f * m(col, c);
        }
    }
    return det;
}

Scalar dot(const Vector& a, const Vector& b)
{
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

Scalar bilinear(const Vector& a, const Matrix& g, const Vector& b) { return dot(a, g * b); }

Subspace Subspace::span(int dimension, int degree, const std::vector<Vector>& vectors)
{
    Subspace s(dimension, degree);
    s.ambient_ = binomial(dimension, degree);
    if (vectors.empty())
        return s;
    auto ef = row_reduce(Matrix::from_rows(vectors, s.ambient_));
    for (std::size_t i = 0; i < ef.pivots.size(); ++i)
        s.rows_.push_back(ef.reduced.row(i));
    return s;
}

Subspace Subspace::span_forms(int degree, const std::vector<Form>& forms, const GradedBasis& basis)
{
    std::vector<Vector> vs;
    for (const auto& f : forms)
        vs.push_back(coordinates(f, degree, basis));
    return span(basis.dimension(), degree, vs);
}

Subspace Subspace::whole(int dimension, int degree, std::size_t ambient_size)
{
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient_size; ++i) {
        Vector v(ambient_size);
        v[i] = Scalar(1);
        vs.push_back(std::move(v));
    }
    return span(dimension, degree, vs);
}

std::size_t Subspace::ambient_size() const { return ambient_ ? ambient_ : binomial(dim_, degree_); }

std::vector<Form> Subspace::forms(const GradedBasis& basis) const
{
    std::vector<Form> out;
    for (const auto& r : rows_)
        out.push_back(from_coordinates(r, degree_, basis));
    return out;
}

bool Subspace::contains(const Vector& v) const
{
    std::vector<Vector> vs(rows_);
    vs.push_back(v);
    return rank(Matrix::from_rows(vs, ambient_size())) == rows_.size();
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.degree_ != degree_ || other.dim_ != dim_)
        throw Error(ErrorKind::AmbientMismatch, "subspaces of different degree pieces");
    for (const auto& r : other.rows_)
        if (!contains(r))
            return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const
{
    if (other.degree_ != degree_ || other.dim_ != dim_)
        throw Error(ErrorKind::AmbientMismatch, "subspaces of different degree pieces");
    return rows_ == other.rows_;
}

namespace {

void check_ambient(const Subspace& a, const Subspace& b)
{
    if (a.degree() != b.degree() || a.dimension() != b.dimension())
        throw Error(ErrorKind::AmbientMismatch, "subspaces of different degree pieces");
}

Vector combine(const std::vector<Vector>& vs, const Vector& coeffs, std::size_t offset, std::size_t count,
               std::size_t size)
{
    Vector out(size);
    for (std::size_t i = 0; i < count; ++i) {
        const Scalar& c = coeffs[offset + i];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < size; ++j)
            if (!vs[i][j].is_zero())
                out[j] += c * vs[i][j];
    }
    return out;
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    std::vector<Vector> vs(a.basis());
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.dimension(), a.degree(), vs);
}

Subspace intersection(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    std::size_t n = a.ambient_size();
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::span(a.dimension(), a.degree(), {});
    std::vector<Vector> cols(a.basis());
    for (const auto& v : b.basis()) {
        Vector neg(v);
        for (auto& x : neg)
            x = -x;
        cols.push_back(std::move(neg));
    }
    std::vector<Vector> out;
    for (const auto& coeffs : null_space(Matrix::from_columns(cols, n)))
        out.push_back(combine(a.basis(), coeffs, 0, a.dim(), n));
    return Subspace::span(a.dimension(), a.degree(), out);
}

Subspace kernel_within(const Matrix& m, const Subspace& within)
{
    std::size_t n = within.ambient_size();
    if (within.dim() == 0)
        return within;
    std::vector<Vector> images;
    for (const auto& v : within.basis())
        images.push_back(m * v);
    std::vector<Vector> out;
    for (const auto& coeffs : null_space(Matrix::from_columns(images, m.rows())))
        out.push_back(combine(within.basis(), coeffs, 0, within.dim(), n));
    return Subspace::span(within.dimension(), within.degree(), out);
}

Subspace orthogonal_complement(const Subspace& s, const Subspace& within, const Matrix& gram)
{
    check_ambient(s, within);
    if (s.dim() == 0)
        return within;
    Matrix pairing(s.dim(), within.ambient_size());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vector row = gram.transpose() * s.basis()[i];
        for (std::size_t j = 0; j < row.size(); ++j)
            pairing(i, j) = row[j];
    }
    return kernel_within(pairing, within);
}

Subspace map_subspace(const Matrix& m, const Subspace& s, int target_degree)
{
    std::vector<Vector> images;
    for (const auto& v : s.basis())
        images.push_back(m * v);
    if (images.empty())
        return Subspace::span(s.dimension(), target_degree, {});
    return Subspace::span(s.dimension(), target_degree, images);
}

}  // namespace pcw
