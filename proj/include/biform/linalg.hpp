#pragma once

#include <biform/matrix.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace biform {

struct RrefResult {
    Mat reduced;                 // same shape as input, zero rows at the bottom
    std::vector<int> pivot_cols; // strictly increasing
    int rank = 0;
};

namespace detail {

// Clears denominators and common factors so a row becomes a primitive
// integer vector. Scaling a row by a positive rational changes neither the
// row space nor the solution set.
inline std::vector<Int> primitive_int_row(const Vec& row)
{
    Int lcm_den = 1;
    for (const auto& x : row)
        if (x != 0) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<Int> out(row.size());
    Int gcd_all = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        out[j] = numerator(row[j]) * (lcm_den / denominator(row[j]));
        gcd_all = boost::multiprecision::gcd(gcd_all, out[j]);
    }
    if (gcd_all > 1)
        for (auto& x : out)
            if (x != 0) x /= gcd_all;
    return out;
}

inline Int exact_div(const Int& a, const Int& b)
{
    assert(b != 0 && a % b == 0);
    return a / b;
}

} // namespace detail

// Reduced row echelon form. Forward elimination is fraction-free
// (one-step Bareiss on primitive integer rows: each update is
// (piv*a - m*b) / prev_piv, with the division exact), which bounds
// intermediate entry growth; the final normalization to unit pivots and
// zeros above them is done in rationals on the surviving rank rows.
inline RrefResult rref(const Mat& m)
{
    const int nrows = m.rows(), ncols = m.cols();

    // Zero rows and exact duplicates cannot contribute pivots; dropping
    // them up front shrinks the stacked systems the solvers build.
    std::vector<std::vector<Int>> rows;
    rows.reserve(nrows);
    {
        std::set<std::vector<Int>> seen;
        for (int i = 0; i < nrows; ++i) {
            auto r = detail::primitive_int_row(m.row(i));
            bool zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
            if (zero) continue;
            if (seen.insert(r).second) rows.push_back(std::move(r));
        }
    }

    std::vector<int> pivots;
    int r = 0;
    Int prev = 1;
    const int work_rows = static_cast<int>(rows.size());
    for (int col = 0; col < ncols && r < work_rows; ++col) {
        int p = -1;
        for (int i = r; i < work_rows; ++i)
            if (rows[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        const Int piv = rows[r][col];
        for (int i = r + 1; i < work_rows; ++i) {
            const Int mult = rows[i][col];
            for (int j = col; j < ncols; ++j) {
                Int t = piv * rows[i][j];
                if (mult != 0 && rows[r][j] != 0) t -= mult * rows[r][j];
                rows[i][j] = detail::exact_div(t, prev);
            }
        }
        prev = piv;
        pivots.push_back(col);
        ++r;
    }
    const int rank = r;

    // Normalize the echelon rows: unit pivots, then eliminate upwards.
    std::vector<Vec> rat_rows(rank, Vec(ncols));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < ncols; ++j) rat_rows[i][j] = Rat(rows[i][j]);
    for (int i = rank - 1; i >= 0; --i) {
        const int pc = pivots[i];
        const Rat piv = rat_rows[i][pc];
        for (int j = pc; j < ncols; ++j) rat_rows[i][j] /= piv;
        for (int k = 0; k < i; ++k) {
            const Rat f = rat_rows[k][pc];
            if (f == 0) continue;
            for (int j = pc; j < ncols; ++j)
                rat_rows[k][j] -= f * rat_rows[i][j];
        }
    }

    RrefResult out;
    out.reduced = Mat(nrows, ncols);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < ncols; ++j) out.reduced(i, j) = rat_rows[i][j];
    out.pivot_cols = std::move(pivots);
    out.rank = rank;
    return out;
}

/// Subspace of a coordinate space, stored as an RREF basis (rows).
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(int ambient_dim, const Mat& spanning_rows) : ambient_(ambient_dim)
    {
        if (spanning_rows.cols() != ambient_dim)
            throw std::invalid_argument("Subspace: spanning rows have wrong width");
        auto rr = rref(spanning_rows);
        basis_ = Mat(rr.rank, ambient_dim);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < ambient_dim; ++j) basis_(i, j) = rr.reduced(i, j);
        pivot_cols_ = rr.pivot_cols;
    }
    static Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors)
    {
        return Subspace(ambient_dim, Mat::from_rows(ambient_dim, vectors));
    }
    static Subspace zero(int ambient_dim) { return span_of(ambient_dim, {}); }
    static Subspace full(int ambient_dim)
    {
        return Subspace(ambient_dim, Mat::identity(ambient_dim));
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    Vec basis_vector(int i) const { return basis_.row(i); }

    // Subtracts the unique combination of basis rows matching v on the
    // pivot coordinates; the remainder is zero iff v lies in the span.
    Vec reduce(Vec v) const
    {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("Subspace::reduce: dimension mismatch");
        for (int i = 0; i < dim(); ++i) {
            const Rat f = v[pivot_cols_[i]];
            if (f == 0) continue;
            for (int j = 0; j < ambient_; ++j)
                if (basis_(i, j) != 0) v[j] -= f * basis_(i, j);
        }
        return v;
    }
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_;
    Mat basis_;
    std::vector<int> pivot_cols_;
};

inline Subspace span_union(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("span_union: ambient dimension mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::span_of(a.ambient_dim(), rows);
}

inline Subspace kernel_basis(const Mat& m)
{
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : rr.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = 1;
        for (int r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = -rr.reduced(r, f);
        vecs.push_back(std::move(x));
    }
    return Subspace::span_of(m.cols(), vecs);
}

// Particular solution of m x = b with all free coordinates set to zero
// (the minimal-pivot choice); nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& b)
{
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto rr = rref(aug);
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols())
        return std::nullopt;
    Vec x(m.cols());
    for (int r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.reduced(r, m.cols());
    return x;
}

inline Mat inverse(const Mat& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto rr = rref(aug);
    if (rr.rank < n || (n > 0 && rr.pivot_cols[n - 1] != n - 1))
        throw std::invalid_argument("inverse: matrix is singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

inline int rank(const Mat& m) { return rref(m).rank; }

/// Coordinates on a quotient V / W: the projection q kills W, the section
/// splits q (q * section = id).
struct QuotientSpace {
    int source_dim = 0;
    int quotient_dim = 0;
    Mat q;       // quotient_dim x source_dim
    Mat section; // source_dim x quotient_dim
};

// Complement convention: the quotient is coordinatized by the non-pivot
// columns of the subspace's RREF basis. Deterministic, and q restricted to
// those coordinate axes is the identity.
inline QuotientSpace quotient_data(const Subspace& sub)
{
    const int n = sub.ambient_dim();
    const int k = sub.dim();
    std::vector<bool> is_pivot(n, false);
    for (int p : sub.pivot_cols()) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    QuotientSpace out;
    out.source_dim = n;
    out.quotient_dim = n - k;
    out.q = Mat(n - k, n);
    out.section = Mat(n, n - k);
    for (int j = 0; j < n - k; ++j) {
        out.q(j, free_cols[j]) = 1;
        for (int r = 0; r < k; ++r)
            out.q(j, sub.pivot_cols()[r]) = -sub.basis()(r, free_cols[j]);
        out.section(free_cols[j], j) = 1;
    }
    return out;
}

} // namespace biform
