#pragma once

#include <biform/alt_form.hpp>

#include <vector>

namespace biform {

/// The primitivity defect of a constant-coefficient 2-form lambda on the
/// abelian vector group a, as a form on a + a: the failure of
/// a*lambda = pr1*lambda + pr2*lambda for the addition map.
///
/// Expanding bilinearly, pr1*lambda + pr2*lambda - a*lambda evaluates to
/// D((v1,v2),(w1,w2)) = -lambda(v1,w2) - lambda(v2,w1), which vanishes only
/// for lambda = 0. Block structure: zero on each copy of a.
struct DefectForm {
    int a_dim = 0;
    AltBilinearForm form; // on a + a, dimension 2 * a_dim

    Rat eval(const Vec& v1, const Vec& v2, const Vec& w1, const Vec& w2) const
    {
        Vec v(2 * a_dim), w(2 * a_dim);
        for (int i = 0; i < a_dim; ++i) {
            v[i] = v1[i];
            v[a_dim + i] = v2[i];
            w[i] = w1[i];
            w[a_dim + i] = w2[i];
        }
        return form.eval(v, w);
    }
};

inline DefectForm primitivity_defect(const AltBilinearForm& lambda)
{
    const int m = lambda.dim();
    Mat d(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Rat& c = lambda.coeffs()(i, j);
            if (c == 0) continue;
            d(i, m + j) = -c;     // -lambda(v1, w2)
            d(m + i, j) = -c;     // -lambda(v2, w1); skewness of lambda keeps d skew
        }
    return DefectForm{m, AltBilinearForm(std::move(d), lambda.basis_tag() + "+" +
                                                           lambda.basis_tag())};
}

/// A constant-coefficient 2-form is primitive iff its defect vanishes,
/// which by the defect formula happens only for the zero form.
inline bool is_primitive(const AltBilinearForm& lambda)
{
    return primitivity_defect(lambda).form.is_zero();
}

/// Darboux data for a possibly degenerate skew form: a basis in which the
/// form is the standard symplectic block plus zeros, the radical, and the
/// projection realizing lambda as the pullback of the standard form.
struct PresymplecticReduction {
    Subspace radical;   // kernel of the coefficient matrix
    int reduced_dim = 0; // 2r = rank
    Mat projection;      // 2r x n, lambda = projection^T * standard * projection
    Mat darboux_basis;   // n x n, rows u1,v1,...,ur,vr then a radical basis

    // Standard form on the reduced space: block diagonal [[0,1],[-1,0]],
    // i.e. sum dx_i ^ dy_i in the interleaved basis (x1,y1,x2,y2,...).
    static Mat standard_form(int two_r)
    {
        Mat s(two_r, two_r);
        for (int b = 0; b + 1 < two_r; b += 2) {
            s(b, b + 1) = 1;
            s(b + 1, b) = -1;
        }
        return s;
    }
};

/// Skew Gram-Schmidt over the rationals. Pairs off basis vectors with unit
/// symplectic pairing and pushes everything orthogonal to the pairs; what
/// remains pairs trivially with everything and spans the radical.
inline PresymplecticReduction presymplectic_reduce(const AltBilinearForm& lambda)
{
    const int n = lambda.dim();
    const Mat& C = lambda.coeffs();
    auto pairing = [&C, n](const Vec& x, const Vec& y) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (C(i, j) != 0 && y[j] != 0) acc += x[i] * C(i, j) * y[j];
        }
        return acc;
    };

    std::vector<Vec> remaining;
    for (int i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        remaining.push_back(std::move(e));
    }
    std::vector<Vec> symplectic_pairs; // u1, v1, u2, v2, ...
    while (true) {
        int pu = -1, pv = -1;
        for (std::size_t i = 0; i < remaining.size() && pu < 0; ++i)
            for (std::size_t j = i + 1; j < remaining.size() && pu < 0; ++j)
                if (pairing(remaining[i], remaining[j]) != 0) {
                    pu = static_cast<int>(i);
                    pv = static_cast<int>(j);
                }
        if (pu < 0) break;
        Vec u = remaining[pu];
        Vec v = remaining[pv];
        remaining.erase(remaining.begin() + pv);
        remaining.erase(remaining.begin() + pu);
        const Rat s = pairing(u, v);
        for (auto& x : v) x /= s; // now pairing(u, v) = 1
        for (auto& x : remaining) {
            const Rat a = pairing(x, v);
            const Rat b = pairing(x, u);
            // x := x - a u + b v kills both pairings
            for (int i = 0; i < n; ++i) x[i] += -a * u[i] + b * v[i];
        }
        symplectic_pairs.push_back(std::move(u));
        symplectic_pairs.push_back(std::move(v));
    }

    PresymplecticReduction out;
    out.radical = kernel_basis(C);
    out.reduced_dim = static_cast<int>(symplectic_pairs.size());

    std::vector<Vec> basis_rows = symplectic_pairs;
    // leftover vectors pair to zero with everything, so they span the radical;
    // use the canonical radical basis for determinism
    for (int r = 0; r < out.radical.dim(); ++r)
        basis_rows.push_back(out.radical.basis_vector(r));
    out.darboux_basis = Mat::from_rows(n, basis_rows);

    // coordinates w.r.t. the darboux basis: alpha = (D^T)^{-1} x; the first
    // 2r coordinate rows give the projection with lambda = q^T S q
    Mat coords = inverse(out.darboux_basis.transpose());
    out.projection = Mat(out.reduced_dim, n);
    for (int i = 0; i < out.reduced_dim; ++i)
        for (int j = 0; j < n; ++j) out.projection(i, j) = coords(i, j);
    return out;
}

} // namespace biform
