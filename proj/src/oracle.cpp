#include "pcw/oracle.hpp"

#include "pcw/error.hpp"
#include "pcw/operators.hpp"

#include <algorithm>
#include <numeric>

namespace pcw {

namespace {

using Tuple = std::vector<int>;

// Sign of the permutation sorting `t`, or 0 when an index repeats.
int levi_civita(const Tuple& t)
{
    int inversions = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j])
                return 0;
            if (t[i] > t[j])
                ++inversions;
        }
    return inversions % 2 ? -1 : 1;
}

Mask mask_of(const Tuple& t)
{
    Mask m = 0;
    for (int i : t)
        m |= Mask(1) << i;
    return m;
}

// All k-tuples over {0..n-1}, repeats included.
std::vector<Tuple> tuples(int n, int k)
{
    std::vector<Tuple> out;
    Tuple t(k, 0);
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && ++t[i] == n)
            t[i--] = 0;
        if (i < 0)
            return out;
    }
}

using SquareMatrix = std::vector<std::vector<Scalar>>;

Scalar leibniz_det(const SquareMatrix& m)
{
    const int n = static_cast<int>(m.size());
    Tuple perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        Scalar p(levi_civita(perm));
        for (int i = 0; i < n && !p.is_zero(); ++i)
            p *= m[i][perm[i]];
        total += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

SquareMatrix adjugate_inverse(const SquareMatrix& m)
{
    const int n = static_cast<int>(m.size());
    Scalar det = leibniz_det(m);
    if (det.is_zero())
        throw Error(ErrorKind::DivisionByZero, "singular matrix");
    SquareMatrix inv(n, std::vector<Scalar>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            SquareMatrix minor;
            for (int i = 0; i < n; ++i) {
                if (i == r)
                    continue;
                std::vector<Scalar> row;
                for (int j = 0; j < n; ++j)
                    if (j != c)
                        row.push_back(m[i][j]);
                minor.push_back(row);
            }
            Scalar cof = leibniz_det(minor);
            inv[c][r] = ((r + c) % 2 ? -cof : cof) / det;
        }
    return inv;
}

// Pfaffian as (1 / (2^n n!)) sum over all permutations.
Scalar pfaffian(const SquareMatrix& w)
{
    const int dim = static_cast<int>(w.size());
    Tuple perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        Scalar p(levi_civita(perm));
        for (int i = 0; i < dim; i += 2)
            p *= w[perm[i]][perm[i + 1]];
        total += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    long norm = 1;
    for (int i = 1; i <= dim / 2; ++i)
        norm *= 2 * i;
    return total / Scalar(norm);
}

struct OracleData {
    SquareMatrix pairing;
    Scalar vol;
};

OracleData prepare(const ManifoldModel& model, StarKind which)
{
    const int n = model.dim;
    if (n > 6)
        throw Error(ErrorKind::DimensionTooLarge, "the brute-force star is limited to 6 generators");
    SquareMatrix w(n, std::vector<Scalar>(n)), g(n, std::vector<Scalar>(n));
    for (const auto& [m, c] : model.omega.terms()) {
        auto idx = mask_indices(m);
        w[idx[0]][idx[1]] = c;
        w[idx[1]][idx[0]] = -c;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[i][j] = model.metric(i, j);
    return {adjugate_inverse(which == StarKind::metric ? g : w), pfaffian(w)};
}

Form star_with(const Form& a, int n, const OracleData& data)
{
    const int k = a.require_degree();
    const auto& pairing = data.pairing;
    const auto& vol = data.vol;

    // Antisymmetric components b_{j1..jk}.
    auto component = [&](const Tuple& t) {
        int s = levi_civita(t);
        return s == 0 ? Scalar(0) : Scalar(s) * a.coefficient(mask_of(t));
    };
    const auto lower = tuples(n, k);
    // Tuples with a vanishing component contribute nothing to any sum below.
    std::vector<std::pair<Tuple, Scalar>> support;
    for (const Tuple& t : lower) {
        Scalar b = component(t);
        if (!b.is_zero())
            support.emplace_back(t, b);
    }

    // Raised components b^{l} = sum_j P^{l1 j1} ... P^{lk jk} b_{j}, summed over
    // every index tuple j. b^{l} is antisymmetric in l, so the contraction
    // (1/k!) sum_l b^{l} eps_{l tail} equals the sum over increasing l alone.
    Form out(n);
    GradedBasis basis(n);
    std::vector<std::pair<Tuple, Scalar>> raised;
    for (Mask lm : basis.degree(k)) {
        Tuple l = mask_indices(lm);
        Scalar sum(0);
        for (const auto& [j, bj] : support) {
            Scalar b = bj;
            for (int i = 0; i < k && !b.is_zero(); ++i)
                b *= pairing[l[i]][j[i]];
            sum += b;
        }
        if (!sum.is_zero())
            raised.emplace_back(std::move(l), sum);
    }

    for (Mask target : basis.degree(n - k)) {
        Tuple tail = mask_indices(target);
        Scalar sum(0);
        for (const auto& [l, bl] : raised) {
            Tuple full(l);
            full.insert(full.end(), tail.begin(), tail.end());
            int eps = levi_civita(full);
            if (eps != 0)
                sum += Scalar(eps) * bl;
        }
        out.add_term(target, sum * vol);
    }
    return out;
}

}  // namespace

Form oracle_star(const Form& a, const ManifoldModel& model, StarKind which)
{
    return star_with(a, model.dim, prepare(model, which));
}

std::vector<OracleMismatch> oracle_check(const ManifoldModel& model)
{
    Geometry geo(model);
    const OracleData metric = prepare(model, StarKind::metric);
    const OracleData symplectic = prepare(model, StarKind::symplectic);
    std::vector<OracleMismatch> out;
    GradedBasis basis(model.dim);
    for (int k = 0; k <= model.dim; ++k)
        for (Mask m : basis.degree(k)) {
            Form e = Form::monomial(model.dim, m);
            for (StarKind which : {StarKind::metric, StarKind::symplectic}) {
                Form expected = star_with(e, model.dim, which == StarKind::metric ? metric : symplectic);
                Form actual = which == StarKind::metric ? hodge_star(e, geo) : symplectic_star(e, geo);
                if (!(expected == actual))
                    out.push_back({which, e, expected, actual});
            }
        }
    return out;
}

}  // namespace pcw
