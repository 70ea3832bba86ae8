#pragma once

#include <biform/alt_form.hpp>
#include <biform/lie_algebra.hpp>

#include <array>
#include <string>
#include <vector>

namespace biform {

inline constexpr const char* kGTag = "g";
inline constexpr const char* kATag = "a";

/// Basis of the Ad-invariant alternating 2-forms on L.
///
/// Invariance is imposed infinitesimally: eta([e_k, e_i], e_j)
/// + eta(e_i, [e_k, e_j]) = 0 for every k and every pair i < j. The unknowns
/// are the pair coordinates of eta; the solution space is the kernel of the
/// stacked system. For a connected group the infinitesimal condition is
/// equivalent to invariance under Ad of the group; the numeric module checks
/// the group-level statement on matrix realizations.
inline std::vector<AltBilinearForm> invariant_two_forms(const LieAlgebra& L)
{
    const int n = L.dim();
    const int unknowns = pair_count(n);
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(n) * unknowns);
    // coefficient of eta(e_m, e_j) in the row, folded onto pair coordinates
    auto add_term = [n](Vec& row, int m, int j, const Rat& coeff) {
        if (m == j || coeff == 0) return;
        if (m < j)
            row[pair_index(m, j, n)] += coeff;
        else
            row[pair_index(j, m, n)] -= coeff;
    };
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec row(unknowns);
                for (int m = 0; m < n; ++m) {
                    add_term(row, m, j, L.c(k, i, m));
                    add_term(row, i, m, L.c(k, j, m));
                }
                if (!is_zero_vec(row)) rows.push_back(std::move(row));
            }
    Subspace sol = kernel_basis(Mat::from_rows(unknowns, rows));
    std::vector<AltBilinearForm> basis;
    basis.reserve(sol.dim());
    for (int r = 0; r < sol.dim(); ++r)
        basis.push_back(AltBilinearForm::from_pair_coords(n, sol.basis_vector(r), kGTag));
    return basis;
}

/// Worst-case |eta([e_i,e_j],e_k) + eta([e_j,e_k],e_i) + eta([e_k,e_i],e_j)|
/// over basis triples; zero iff eta is a 2-cocycle of the trivial-coefficient
/// complex. Vacuously zero below dimension 3.
inline Rat cocycle_residual(const LieAlgebra& L, const AltBilinearForm& eta)
{
    if (eta.dim() != L.dim())
        throw std::invalid_argument("cocycle_residual: dimension mismatch");
    const int n = L.dim();
    Rat worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ei(n), ej(n), ek(n);
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Rat s = eta.eval(L.bracket_basis(i, j), ek) +
                        eta.eval(L.bracket_basis(j, k), ei) +
                        eta.eval(L.bracket_basis(k, i), ej);
                worst = std::max(worst, rat_abs(s));
            }
    return worst;
}

/// Worst-case |eta([e_i,e_j],e_k)|; zero iff eta kills [g,g] in the first
/// slot (and by skewness in the second).
inline Rat reduced_residual(const LieAlgebra& L, const AltBilinearForm& eta)
{
    if (eta.dim() != L.dim())
        throw std::invalid_argument("reduced_residual: dimension mismatch");
    const int n = L.dim();
    Rat worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec bij = L.bracket_basis(i, j);
            if (is_zero_vec(bij)) continue;
            for (int k = 0; k < n; ++k) {
                Vec ek(n);
                ek[k] = 1;
                worst = std::max(worst, rat_abs(eta.eval(bij, ek)));
            }
        }
    return worst;
}

struct DescentError : std::runtime_error {
    DescentError(int i, int j, int k)
        : std::runtime_error("descend: form does not vanish on [g,g]; offending triple (e" +
                             std::to_string(i) + ", e" + std::to_string(j) + ", e" +
                             std::to_string(k) + ")"),
          triple{i, j, k}
    {
    }
    std::array<int, 3> triple;
};

/// Descends a form killing [g,g] to the quotient: lambda(v, w)
/// = eta(section v, section w). Well-definedness (independence of the lift)
/// follows from the precondition, which is checked here.
inline AltBilinearForm descend(const LieAlgebra& L, const AltBilinearForm& eta,
                               const QuotientSpace& quot)
{
    if (eta.dim() != L.dim() || quot.source_dim != L.dim())
        throw std::invalid_argument("descend: dimension mismatch");
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec bij = L.bracket_basis(i, j);
            if (is_zero_vec(bij)) continue;
            for (int k = 0; k < n; ++k) {
                Vec ek(n);
                ek[k] = 1;
                if (eta.eval(bij, ek) != 0) throw DescentError(i, j, k);
            }
        }
    Mat lam = quot.section.transpose() * eta.coeffs() * quot.section;
    return AltBilinearForm(std::move(lam), kATag);
}

/// (q* lambda)(x, y) = lambda(qx, qy); coefficients q^T C q.
inline AltBilinearForm pullback(const QuotientSpace& quot, const AltBilinearForm& lambda)
{
    if (lambda.dim() != quot.quotient_dim)
        throw std::invalid_argument("pullback: dimension mismatch");
    Mat up = quot.q.transpose() * lambda.coeffs() * quot.q;
    return AltBilinearForm(std::move(up), kGTag);
}

struct ClassificationReport {
    std::string algebra_name;
    int dim_g = 0;
    int dim_a = 0;
    int dim_invariant_space = 0;
    int expected_dim = 0; // dim_a choose 2
    std::vector<AltBilinearForm> basis_forms;
    bool cocycle_identity_ok = false;   // every basis form is a 2-cocycle
    bool reduced_identity_ok = false;   // every basis form kills [g,g]
    bool pullback_descend_ok = false;   // pullback(descend(.)) = id on the invariant space
    bool descend_pullback_ok = false;   // descend(pullback(.)) = id on Lambda^2 a*
    bool dims_match = false;            // dim_invariant_space == expected_dim
    bool vanishing_predicate = false;   // dim a <= 1, equivalently no nonzero forms

    bool passed() const
    {
        return cocycle_identity_ok && reduced_identity_ok && pullback_descend_ok &&
               descend_pullback_ok && dims_match;
    }
};

struct ClassificationError : std::runtime_error {
    explicit ClassificationError(ClassificationReport r)
        : std::runtime_error("classification identity failed on algebra '" +
                             r.algebra_name + "'"),
          report(std::move(r))
    {
    }
    ClassificationReport report;
};

/// Runs the full classification and verifies every identity it rests on:
/// the solution space has dimension C(dim a, 2), each basis form satisfies
/// both residual identities, and descent/pullback are mutually inverse. A
/// failure falsifies the implementation, never the mathematics, so it is
/// raised as an error carrying the structured report.
inline ClassificationReport classify(const LieAlgebra& L)
{
    ClassificationReport rep;
    rep.algebra_name = L.name();
    rep.dim_g = L.dim();
    rep.basis_forms = invariant_two_forms(L);
    rep.dim_invariant_space = static_cast<int>(rep.basis_forms.size());

    QuotientSpace quot = L.abelianization();
    rep.dim_a = quot.quotient_dim;
    rep.expected_dim = pair_count(rep.dim_a);
    rep.dims_match = rep.dim_invariant_space == rep.expected_dim;
    rep.vanishing_predicate = rep.dim_a <= 1;

    rep.cocycle_identity_ok = true;
    rep.reduced_identity_ok = true;
    rep.pullback_descend_ok = true;
    for (const auto& eta : rep.basis_forms) {
        if (cocycle_residual(L, eta) != 0) rep.cocycle_identity_ok = false;
        if (reduced_residual(L, eta) != 0) {
            rep.reduced_identity_ok = false;
            rep.pullback_descend_ok = false; // descent precondition broken
            continue;
        }
        AltBilinearForm back = pullback(quot, descend(L, eta, quot));
        if (back != eta) rep.pullback_descend_ok = false;
    }

    rep.descend_pullback_ok = true;
    for (int idx = 0; idx < rep.expected_dim; ++idx) {
        auto [i, j] = pair_from_index(idx, rep.dim_a);
        AltBilinearForm lam = AltBilinearForm::wedge(rep.dim_a, i, j, kATag);
        AltBilinearForm round = descend(L, pullback(quot, lam), quot);
        if (round != lam) rep.descend_pullback_ok = false;
    }

    if (!rep.passed()) throw ClassificationError(std::move(rep));
    return rep;
}

/// Fixed space of the induced action of the given automorphisms on
/// Lambda^2 a*. Generators suffice: the kernel of the stacked
/// (rho(phi)* - id) equals the fixed space of the group they generate.
inline Subspace component_invariants(const LieAlgebra& L,
                                     const std::vector<LieAutomorphism>& autos)
{
    QuotientSpace quot = L.abelianization();
    const int m = quot.quotient_dim;
    const int nc = pair_count(m);
    std::vector<Vec> rows;
    for (const auto& phi : autos) {
        // action on a: well-defined because automorphisms preserve [g,g]
        Mat rho = quot.q * phi.matrix() * quot.section;
        // induced action on pair coordinates, minus the identity
        for (int r = 0; r < nc; ++r) {
            auto [i, j] = pair_from_index(r, m);
            Vec row(nc);
            for (int s = 0; s < nc; ++s) {
                auto [k, l] = pair_from_index(s, m);
                row[s] = rho(k, i) * rho(l, j) - rho(l, i) * rho(k, j);
            }
            row[r] -= 1;
            if (!is_zero_vec(row)) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return Subspace::full(nc);
    return kernel_basis(Mat::from_rows(nc, rows));
}

/// Verifies by exact rank computation that Lambda^2 q* is injective for a
/// surjective q. True for every valid input; rejects q without full row rank.
inline bool pullback_injectivity_check(const Mat& q)
{
    if (rank(q) != q.rows())
        throw std::invalid_argument("pullback_injectivity_check: q is not surjective");
    const int n = q.cols(), m = q.rows();
    const int src = pair_count(m);
    std::vector<Vec> rows;
    for (int r = 0; r < pair_count(n); ++r) {
        auto [i, j] = pair_from_index(r, n);
        Vec row(src);
        for (int s = 0; s < src; ++s) {
            auto [k, l] = pair_from_index(s, m);
            row[s] = q(k, i) * q(l, j) - q(l, i) * q(k, j);
        }
        rows.push_back(std::move(row));
    }
    return kernel_basis(Mat::from_rows(src, rows)).dim() == 0;
}

} // namespace biform
