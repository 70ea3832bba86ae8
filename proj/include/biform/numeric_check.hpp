#pragma once

#include <biform/alt_form.hpp>
#include <biform/catalog.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Floating point is quarantined to this module: it cross-validates the exact
// invariance solver at the group level, computing Ad_g = g . g^-1 for
// g = exp(t Z) on a matrix realization and comparing form values.

namespace biform::numeric {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr double kDefaultTol = 1e-9;

/// Square matrix of doubles, just big enough for exponentials and
/// conjugation on realizations (dimensions stay in the single digits).
struct DMat {
    int n = 0;
    std::vector<double> e;

    DMat() = default;
    explicit DMat(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    static DMat identity(int n)
    {
        DMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static DMat from_exact(const Mat& m)
    {
        DMat d(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
        return d;
    }

    friend DMat operator*(const DMat& a, const DMat& b)
    {
        DMat r(a.n);
        for (int i = 0; i < a.n; ++i)
            for (int k = 0; k < a.n; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < a.n; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend DMat operator*(double s, const DMat& a)
    {
        DMat r = a;
        for (auto& x : r.e) x *= s;
        return r;
    }
    friend DMat operator+(const DMat& a, const DMat& b)
    {
        DMat r = a;
        for (std::size_t k = 0; k < r.e.size(); ++k) r.e[k] += b.e[k];
        return r;
    }

    double inf_norm() const
    {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += std::fabs((*this)(i, j));
            worst = std::max(worst, row);
        }
        return worst;
    }
};

/// Matrix exponential by scaling and squaring: the argument is halved until
/// its inf-norm is at most 1/2, the Taylor series is summed to order 18
/// (term 1/18! ~ 1.6e-16, below double precision at that norm), and the
/// result is squared back.
inline DMat matrix_exp(const DMat& m)
{
    if (m.n == 0) return m;
    for (double x : m.e)
        if (!std::isfinite(x)) throw std::invalid_argument("matrix_exp: non-finite entry");

    int squarings = 0;
    double norm = m.inf_norm();
    while (norm > 0.5 && squarings < 64) {
        norm /= 2.0;
        ++squarings;
    }
    DMat a = std::ldexp(1.0, -squarings) * m;

    constexpr int kOrder = 18;
    DMat r = DMat::identity(m.n);
    DMat term = DMat::identity(m.n);
    for (int k = 1; k <= kOrder; ++k) {
        term = (1.0 / k) * (term * a);
        r = r + term;
    }
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

struct NumericReport {
    int samples = 0;
    double max_relative_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RealizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Least-squares coordinates of target in the span of the basis matrices,
// via the normal equations (the basis is known independent, so the Gram
// matrix is positive definite). Gaussian elimination with partial pivoting.
inline std::vector<double> expand_in_basis(const std::vector<DMat>& basis, const DMat& target,
                                           double* residual_out)
{
    const int n = static_cast<int>(basis.size());
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < target.e.size(); ++k)
                dot += basis[i].e[k] * basis[j].e[k];
            a[i][j] = dot;
            a[j][i] = dot;
        }
        double rhs = 0.0;
        for (std::size_t k = 0; k < target.e.size(); ++k) rhs += basis[i].e[k] * target.e[k];
        a[i][n] = rhs;
    }
    for (int col = 0; col < n; ++col) {
        int p = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[p][col])) p = i;
        std::swap(a[col], a[p]);
        for (int i = col + 1; i < n; ++i) {
            const double f = a[i][col] / a[col][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = a[i][n];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    if (residual_out) {
        double worst = 0.0;
        for (std::size_t k = 0; k < target.e.size(); ++k) {
            double recon = 0.0;
            for (int i = 0; i < n; ++i) recon += x[i] * basis[i].e[k];
            worst = std::max(worst, std::fabs(recon - target.e[k]));
        }
        *residual_out = worst;
    }
    return x;
}

inline std::vector<DMat> realization_or_throw(const CatalogEntry& entry)
{
    if (!entry.realization)
        throw RealizationError("entry '" + entry.name + "' has no matrix realization");
    std::vector<DMat> basis;
    for (const auto& m : *entry.realization) basis.push_back(DMat::from_exact(m));
    return basis;
}

inline DMat combine(const std::vector<DMat>& basis, const std::vector<double>& coords)
{
    DMat out(basis.empty() ? 0 : basis[0].n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i] != 0.0) out = out + coords[i] * basis[i];
    return out;
}

inline double eval_form(const AltBilinearForm& eta, const std::vector<double>& x,
                        const std::vector<double>& y)
{
    double acc = 0.0;
    for (int i = 0; i < eta.dim(); ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < eta.dim(); ++j) {
            const Rat& c = eta.coeffs()(i, j);
            if (c != 0 && y[j] != 0.0) acc += x[i] * to_double(c) * y[j];
        }
    }
    return acc;
}

inline std::vector<double> random_coords(int n, std::mt19937_64& rng, int range = 2)
{
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<double> v(n, 0.0);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& x : v) {
            x = dist(rng);
            nonzero = nonzero || x != 0.0;
        }
    }
    return v;
}

} // namespace detail

/// Checks |eta(Ad_g X, Ad_g Y) - eta(X, Y)| / scale over g = exp(t Z) for a
/// deterministic t-grid (t_samples points in [-1, 1]) and seeded random
/// X, Y, Z. Ad_g X is computed as g X g^-1 on the realization and expanded
/// back in basis coordinates by least squares; a large re-expansion residual
/// means the realization is broken and raises RealizationError.
inline NumericReport ad_exp_invariance(const CatalogEntry& entry, const AltBilinearForm& eta,
                                       int t_samples = 21, int z_samples = 20,
                                       double tol = kDefaultTol,
                                       std::uint64_t seed = kDefaultSeed)
{
    if (eta.dim() != entry.algebra.dim())
        throw std::invalid_argument("ad_exp_invariance: form/algebra dimension mismatch");
    std::vector<DMat> basis = detail::realization_or_throw(entry);
    const int n = entry.algebra.dim();
    std::mt19937_64 rng(seed);

    NumericReport rep;
    rep.tolerance = tol;
    if (n == 0 || t_samples <= 0 || z_samples <= 0) {
        rep.pass = true;
        return rep;
    }

    for (int zs = 0; zs < z_samples; ++zs) {
        auto xc = detail::random_coords(n, rng);
        auto yc = detail::random_coords(n, rng);
        auto zc = detail::random_coords(n, rng);
        const DMat xm = detail::combine(basis, xc);
        const DMat ym = detail::combine(basis, yc);
        const DMat zm = detail::combine(basis, zc);
        const double base = detail::eval_form(eta, xc, yc);

        for (int ts = 0; ts < t_samples; ++ts) {
            const double t = t_samples == 1 ? 0.0 : -1.0 + 2.0 * ts / (t_samples - 1);
            const DMat g = matrix_exp(t * zm);
            const DMat ginv = matrix_exp(-t * zm);
            double resid_x = 0.0, resid_y = 0.0;
            auto adx = detail::expand_in_basis(basis, g * xm * ginv, &resid_x);
            auto ady = detail::expand_in_basis(basis, g * ym * ginv, &resid_y);
            const double scale = std::max(1.0, (g * xm * ginv).inf_norm());
            if (resid_x > 1e-7 * scale || resid_y > 1e-7 * scale)
                throw RealizationError("entry '" + entry.name +
                                       "': Ad_g of a basis combination left the span of the "
                                       "realization (broken realization)");
            const double val = detail::eval_form(eta, adx, ady);
            const double denom = std::max({1.0, std::fabs(base), std::fabs(val)});
            rep.max_relative_error =
                std::max(rep.max_relative_error, std::fabs(val - base) / denom);
            ++rep.samples;
        }
    }
    rep.pass = rep.max_relative_error <= tol;
    return rep;
}

/// Central-difference check that (d/dt)|_0 eta(Ad_exp(tZ) X, Y) equals
/// eta([Z, X], Y): ties the group-level invariance to the infinitesimal
/// system the solver actually imposes. Returns the worst absolute
/// discrepancy over seeded samples. X, Y, Z have +-1 coordinates so the
/// O(h^2) truncation term stays well under the 1e-6 budget at h = 1e-4.
inline double ad_derivative_consistency(const CatalogEntry& entry, const AltBilinearForm& eta,
                                        int samples = 20, std::uint64_t seed = kDefaultSeed)
{
    std::vector<DMat> basis = detail::realization_or_throw(entry);
    const int n = entry.algebra.dim();
    if (n == 0) return 0.0;
    std::mt19937_64 rng(seed);
    const double h = 1e-4;

    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        auto xc = detail::random_coords(n, rng, 1);
        auto yc = detail::random_coords(n, rng, 1);
        auto zc = detail::random_coords(n, rng, 1);
        const DMat xm = detail::combine(basis, xc);
        const DMat zm = detail::combine(basis, zc);

        auto value_at = [&](double t) {
            const DMat g = matrix_exp(t * zm);
            const DMat ginv = matrix_exp(-t * zm);
            double resid = 0.0;
            auto adx = detail::expand_in_basis(basis, g * xm * ginv, &resid);
            return detail::eval_form(eta, adx, yc);
        };
        const double fd = (value_at(h) - value_at(-h)) / (2.0 * h);

        Vec zr(n), xr(n);
        for (int i = 0; i < n; ++i) {
            zr[i] = Rat(static_cast<long>(zc[i]));
            xr[i] = Rat(static_cast<long>(xc[i]));
        }
        Vec zx = entry.algebra.bracket(zr, xr);
        std::vector<double> zxd(n);
        for (int i = 0; i < n; ++i) zxd[i] = to_double(zx[i]);
        const double exact = detail::eval_form(eta, zxd, yc);
        worst = std::max(worst, std::fabs(fd - exact));
    }
    return worst;
}

} // namespace biform::numeric
