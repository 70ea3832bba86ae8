#pragma once

#include <biform/invariant_forms.hpp>
#include <biform/lie_algebra.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace biform {

/// Basis of degree-k cochains: strictly increasing k-tuples of basis
/// indices in lexicographic order, C(n, k) of them.
struct CochainBasis {
    int degree = 0;
    std::vector<std::vector<int>> tuples;

    static CochainBasis make(int n, int k)
    {
        CochainBasis b;
        b.degree = k;
        std::vector<int> cur;
        build(n, k, 0, cur, b.tuples);
        return b;
    }

    int size() const { return static_cast<int>(tuples.size()); }

    int index_of(const std::vector<int>& tuple) const
    {
        auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
        assert(it != tuples.end() && *it == tuple);
        return static_cast<int>(it - tuples.begin());
    }

private:
    static void build(int n, int k, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out)
    {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            build(n, k, v + 1, cur, out);
            cur.pop_back();
        }
    }
};

namespace detail {

// Sorts (extra, rest...) into increasing order; returns the sign of the
// permutation, or 0 when extra collides with an element of rest.
inline int sorted_insert(int extra, const std::vector<int>& rest, std::vector<int>& out)
{
    out.clear();
    int sign = 1;
    bool placed = false;
    for (int v : rest) {
        if (v == extra) return 0;
        if (!placed && v > extra) {
            out.push_back(extra);
            placed = true;
        }
        if (!placed) sign = -sign;
        out.push_back(v);
    }
    if (!placed) out.push_back(extra);
    return sign;
}

} // namespace detail

/// Matrix of the trivial-coefficient Chevalley-Eilenberg differential
/// from degree-k to degree-(k+1) cochains, in lexicographic tuple bases.
///
/// Convention: (delta eta)(X_1,...,X_{k+1}) = sum_{i<j} (-1)^{i+j}
/// eta([X_i,X_j], X_1,...,X^_i,...,X^_j,...,X_{k+1}) with 1-based argument
/// positions and global prefactor +1. For a 1-cochain p this gives
/// (delta p)(X,Y) = -p([X,Y]); the sign is pinned by the delta^2 = 0 tests.
inline Mat ce_differential(const LieAlgebra& L, int k)
{
    if (k < 0 || k > 2) throw std::invalid_argument("ce_differential: degree must be 0..2");
    const int n = L.dim();
    CochainBasis dom = CochainBasis::make(n, k);
    CochainBasis cod = CochainBasis::make(n, k + 1);
    Mat d(cod.size(), dom.size());
    if (k == 0) return d; // no argument pairs: constants are closed

    std::vector<int> rest, sorted;
    for (int row = 0; row < cod.size(); ++row) {
        const auto& t = cod.tuples[row];
        for (int a = 0; a < k + 1; ++a)
            for (int b = a + 1; b < k + 1; ++b) {
                // 1-based positions a+1, b+1: (-1)^{(a+1)+(b+1)} = (-1)^{a+b}
                const int pair_sign = ((a + b) % 2 == 0) ? 1 : -1;
                rest.clear();
                for (int p = 0; p < k + 1; ++p)
                    if (p != a && p != b) rest.push_back(t[p]);
                for (int m = 0; m < n; ++m) {
                    const Rat& cm = L.c(t[a], t[b], m);
                    if (cm == 0) continue;
                    int s = detail::sorted_insert(m, rest, sorted);
                    if (s == 0) continue;
                    d(row, dom.index_of(sorted)) += Rat(pair_sign * s) * cm;
                }
            }
    }
    return d;
}

/// dim H^k = dim ker(delta_k) - rank(delta_{k-1}), trivial coefficients.
inline int cohomology_dim(const LieAlgebra& L, int k)
{
    if (k < 0 || k > 2) throw std::invalid_argument("cohomology_dim: degree must be 0..2");
    Mat dk = ce_differential(L, k);
    int ker = dk.cols() - rank(dk);
    int im = k == 0 ? 0 : rank(ce_differential(L, k - 1));
    return ker - im;
}

/// Linear functional p with eta(e_i, e_j) = p([e_i, e_j]) for all i < j.
struct CoboundaryWitness {
    Vec p;
};

/// Solves p([.,.]) = eta for a 2-cocycle eta. Inconsistency is a legitimate
/// outcome (eta represents a nonzero class in H^2); the returned solution is
/// the minimal-pivot one (free coordinates zero).
inline std::optional<CoboundaryWitness> coboundary_witness(const LieAlgebra& L,
                                                           const AltBilinearForm& eta)
{
    if (eta.dim() != L.dim())
        throw std::invalid_argument("coboundary_witness: dimension mismatch");
    if (cocycle_residual(L, eta) != 0)
        throw std::invalid_argument("coboundary_witness: form is not a 2-cocycle");
    const int n = L.dim();
    std::vector<Vec> rows;
    Vec rhs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            rows.push_back(L.bracket_basis(i, j));
            rhs.push_back(eta.coeffs()(i, j));
        }
    auto sol = solve(Mat::from_rows(n, rows), rhs);
    if (!sol) return std::nullopt;
    return CoboundaryWitness{*sol};
}

struct VanishingCriterion {
    bool satisfied = false;
    bool h2_zero = false;
    bool lcs_stable = false; // [g,[g,g]] = [g,g]
    int h2_dim = 0;
    std::string explanation;
};

/// Sufficient condition for an empty invariant-form space: H^2 = 0 and
/// [g,[g,g]] = [g,g]. When it holds, the conclusion is verified against the
/// solver; a discrepancy would falsify the implementation and throws.
inline VanishingCriterion vanishing_criterion(const LieAlgebra& L)
{
    VanishingCriterion out;
    out.h2_dim = cohomology_dim(L, 2);
    out.h2_zero = out.h2_dim == 0;
    Subspace der = L.derived_subalgebra();
    Subspace lcs2 = L.second_lcs_term();
    out.lcs_stable = lcs2 == der;
    out.satisfied = out.h2_zero && out.lcs_stable;

    std::string h2_part = out.h2_zero ? "H^2 = 0" : "H^2 has dimension " +
                                                        std::to_string(out.h2_dim);
    std::string lcs_part = out.lcs_stable ? "[g,[g,g]] = [g,g]"
                                          : "[g,[g,g]] (dim " + std::to_string(lcs2.dim()) +
                                                ") is a proper subspace of [g,g] (dim " +
                                                std::to_string(der.dim()) + ")";
    out.explanation = h2_part + "; " + lcs_part;

    if (out.satisfied && !invariant_two_forms(L).empty())
        throw std::logic_error(
            "vanishing_criterion: criterion holds but invariant forms exist");
    return out;
}

} // namespace biform
