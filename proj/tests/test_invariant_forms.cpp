#include <biform/catalog.hpp>
#include <biform/invariant_forms.hpp>

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace biform;

namespace {

// Independent route to the invariant-form space: unknowns are all n^2
// matrix entries, skew-symmetry enters as explicit equations, and the
// invariance condition is stacked for every ordered index pair. The solver
// under test uses only the C(n,2) pair coordinates and i < j.
Mat brute_force_system(const LieAlgebra& L)
{
    const int n = L.dim();
    const int N = n * n;
    auto uidx = [n](int i, int j) { return i * n + j; };
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Vec r(N);
            r[uidx(i, j)] += 1;
            r[uidx(j, i)] += 1;
            rows.push_back(std::move(r));
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec r(N);
                for (int m = 0; m < n; ++m) {
                    if (L.c(k, i, m) != 0) r[uidx(m, j)] += L.c(k, i, m);
                    if (L.c(k, j, m) != 0) r[uidx(i, m)] += L.c(k, j, m);
                }
                if (!is_zero_vec(r)) rows.push_back(std::move(r));
            }
    return Mat::from_rows(N, rows);
}

int brute_force_invariant_dim(const LieAlgebra& L)
{
    return kernel_basis(brute_force_system(L)).dim();
}

Vec flatten(const AltBilinearForm& f)
{
    Vec v;
    for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j) v.push_back(f.coeffs()(i, j));
    return v;
}

} // namespace

TEST_CASE("invariant_two_forms on the three reference algebras")
{
    SECTION("abelian: every skew form is invariant")
    {
        auto basis = invariant_two_forms(catalog::abelian(3).algebra);
        CHECK(basis.size() == 3);
        CHECK(brute_force_invariant_dim(catalog::abelian(3).algebra) == 3);
    }
    SECTION("su2: none")
    {
        auto basis = invariant_two_forms(catalog::su2().algebra);
        CHECK(basis.empty());
        CHECK(brute_force_invariant_dim(catalog::su2().algebra) == 0);
    }
    SECTION("heisenberg(3): exactly e0*^e1*")
    {
        LieAlgebra h = catalog::heisenberg(3).algebra;
        auto basis = invariant_two_forms(h);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == AltBilinearForm::wedge(3, 0, 1, kGTag));
        CHECK(brute_force_invariant_dim(h) == 1);
    }
}

TEST_CASE("solver agrees with the brute-force route on varied algebras")
{
    std::mt19937_64 rng(901);
    std::vector<LieAlgebra> algebras{
        catalog::sl2().algebra,
        catalog::aff1().algebra,
        catalog::heisenberg(5).algebra,
        catalog::so(4).algebra,
        catalog::gl(2).algebra,
        testutil::random_two_step_nilpotent(rng, 3, 2),
        testutil::random_basis_change(rng, catalog::heisenberg(3).algebra),
    };
    for (const auto& L : algebras) {
        auto basis = invariant_two_forms(L);
        Mat sys = brute_force_system(L);
        CHECK(static_cast<int>(basis.size()) == kernel_basis(sys).dim());
        for (const auto& f : basis) CHECK(is_zero_vec(sys.apply(flatten(f))));
    }
}

TEST_CASE("cocycle and reduced residuals")
{
    SECTION("abelian: all residuals vanish")
    {
        LieAlgebra ab = catalog::abelian(4).algebra;
        std::mt19937_64 rng(111);
        AltBilinearForm f =
            AltBilinearForm::from_pair_coords(4, testutil::random_vec(rng, 6), kGTag);
        CHECK(cocycle_residual(ab, f) == 0);
        CHECK(reduced_residual(ab, f) == 0);
    }
    SECTION("aff(1): the cocycle identity is vacuous but the reduced one is not")
    {
        LieAlgebra aff = catalog::aff1().algebra;
        AltBilinearForm f = AltBilinearForm::wedge(2, 0, 1, kGTag);
        CHECK(cocycle_residual(aff, f) == 0);   // no triples below dim 3
        CHECK(reduced_residual(aff, f) == 1);   // |eta([H,E], H)| = |eta(E, H)| = 1
    }
    SECTION("every solver output satisfies both identities exactly")
    {
        for (const auto& L : {catalog::heisenberg(5).algebra, catalog::abelian(3).algebra,
                              catalog::strictly_upper_triangular(4).algebra}) {
            for (const auto& f : invariant_two_forms(L)) {
                CHECK(cocycle_residual(L, f) == 0);
                CHECK(reduced_residual(L, f) == 0);
            }
        }
    }
    SECTION("dimension mismatch is rejected")
    {
        AltBilinearForm f = AltBilinearForm::wedge(2, 0, 1, kGTag);
        CHECK_THROWS_AS(cocycle_residual(catalog::abelian(3).algebra, f),
                        std::invalid_argument);
        CHECK_THROWS_AS(reduced_residual(catalog::abelian(3).algebra, f),
                        std::invalid_argument);
    }
}

TEST_CASE("descend")
{
    LieAlgebra h = catalog::heisenberg(3).algebra;
    QuotientSpace quot = h.abelianization();
    REQUIRE(quot.quotient_dim == 2);

    SECTION("the invariant form descends to the top wedge of a")
    {
        AltBilinearForm eta = AltBilinearForm::wedge(3, 0, 1, kGTag);
        AltBilinearForm lam = descend(h, eta, quot);
        CHECK(lam == AltBilinearForm::wedge(2, 0, 1, kATag));
        CHECK(lam.basis_tag() == kATag);
    }
    SECTION("zero descends to zero")
    {
        CHECK(descend(h, AltBilinearForm::zero(3, kGTag), quot).is_zero());
    }
    SECTION("on an abelian algebra descent is the identity on coefficients")
    {
        LieAlgebra ab = catalog::abelian(3).algebra;
        QuotientSpace q = ab.abelianization();
        std::mt19937_64 rng(222);
        AltBilinearForm f =
            AltBilinearForm::from_pair_coords(3, testutil::random_vec(rng, 3), kGTag);
        CHECK(descend(ab, f, q).coeffs() == f.coeffs());
    }
    SECTION("forms that do not kill [g,g] are rejected with the offending triple")
    {
        LieAlgebra aff = catalog::aff1().algebra;
        AltBilinearForm f = AltBilinearForm::wedge(2, 0, 1, kGTag);
        try {
            descend(aff, f, aff.abelianization());
            FAIL("expected DescentError");
        } catch (const DescentError& e) {
            CHECK(e.triple == std::array<int, 3>{0, 1, 0}); // eta([e0,e1], e0) = -1
        }
    }
    SECTION("descent is independent of the choice of lifts")
    {
        std::mt19937_64 rng(333);
        for (const auto& L : {catalog::heisenberg(5).algebra,
                              testutil::random_two_step_nilpotent(rng, 3, 3)}) {
            QuotientSpace q = L.abelianization();
            Subspace der = L.derived_subalgebra();
            for (const auto& eta : invariant_two_forms(L)) {
                AltBilinearForm lam = descend(L, eta, q);
                for (int trial = 0; trial < 10; ++trial) {
                    // perturb every lift by a random element of [g,g]
                    for (int a = 0; a < q.quotient_dim; ++a)
                        for (int b = a + 1; b < q.quotient_dim; ++b) {
                            Vec la(L.dim()), lb(L.dim());
                            for (int i = 0; i < L.dim(); ++i) {
                                la[i] = q.section(i, a);
                                lb[i] = q.section(i, b);
                            }
                            for (int r = 0; r < der.dim(); ++r) {
                                Rat ca = testutil::random_rat(rng);
                                Rat cb = testutil::random_rat(rng);
                                for (int i = 0; i < L.dim(); ++i) {
                                    la[i] += ca * der.basis_vector(r)[i];
                                    lb[i] += cb * der.basis_vector(r)[i];
                                }
                            }
                            CHECK(eta.eval(la, lb) == lam.coeffs()(a, b));
                        }
                }
            }
        }
    }
}

TEST_CASE("pullback")
{
    LieAlgebra h = catalog::heisenberg(3).algebra;
    QuotientSpace quot = h.abelianization();

    CHECK(pullback(quot, AltBilinearForm::zero(2, kATag)).is_zero());

    SECTION("roundtrip on the invariant space")
    {
        for (const auto& eta : invariant_two_forms(h))
            CHECK(pullback(quot, descend(h, eta, quot)) == eta);
    }
    SECTION("pullbacks land in the invariant space")
    {
        std::mt19937_64 rng(444);
        for (const auto& L : {catalog::heisenberg(5).algebra, catalog::aff1().algebra,
                              catalog::strictly_upper_triangular(4).algebra}) {
            QuotientSpace q = L.abelianization();
            auto basis = invariant_two_forms(L);
            std::vector<Vec> coords;
            for (const auto& f : basis) coords.push_back(f.pair_coords());
            Subspace inv_space =
                Subspace::span_of(pair_count(L.dim()), coords);
            for (int trial = 0; trial < 5; ++trial) {
                AltBilinearForm lam = AltBilinearForm::from_pair_coords(
                    q.quotient_dim, testutil::random_vec(rng, pair_count(q.quotient_dim)),
                    kATag);
                CHECK(inv_space.contains(pullback(q, lam).pair_coords()));
            }
        }
    }
}

TEST_CASE("classify")
{
    SECTION("u(2) has no invariant forms but a 1-dimensional abelianization")
    {
        ClassificationReport rep = classify(catalog::u(2).algebra);
        CHECK(rep.dim_g == 4);
        CHECK(rep.dim_a == 1);
        CHECK(rep.dim_invariant_space == 0);
        CHECK(rep.vanishing_predicate);
        CHECK(rep.passed());
    }
    SECTION("abelian(4) carries all C(4,2) = 6 wedges")
    {
        ClassificationReport rep = classify(catalog::abelian(4).algebra);
        CHECK(rep.dim_invariant_space == 6);
        CHECK_FALSE(rep.vanishing_predicate);
        CHECK(rep.passed());
    }
    SECTION("heisenberg(5): a is 4-dimensional, forms are 6-dimensional")
    {
        LieAlgebra h5 = catalog::heisenberg(5).algebra;
        ClassificationReport rep = classify(h5);
        CHECK(rep.dim_a == 4);
        CHECK(rep.dim_invariant_space == 6);
        CHECK(rep.dim_invariant_space == brute_force_invariant_dim(h5));
        CHECK(rep.passed());
    }
}

TEST_CASE("classification dimensions are basis-independent")
{
    std::mt19937_64 rng(987);
    for (const auto& seed_entry : {catalog::heisenberg(3), catalog::aff1(),
                                   catalog::strictly_upper_triangular(4), catalog::su2(),
                                   catalog::gl(2)}) {
        ClassificationReport base = classify(seed_entry.algebra);
        for (int trial = 0; trial < 3; ++trial) {
            LieAlgebra moved = testutil::random_basis_change(rng, seed_entry.algebra);
            ClassificationReport rep = classify(moved);
            INFO(seed_entry.name);
            CHECK(rep.dim_a == base.dim_a);
            CHECK(rep.dim_invariant_space == base.dim_invariant_space);
        }
    }
}

TEST_CASE("component_invariants")
{
    LieAlgebra ab2 = catalog::abelian(2).algebra;

    SECTION("the trivial set of generators fixes everything")
    {
        CHECK(component_invariants(ab2, {}).dim() == 1);
        std::vector<LieAutomorphism> id{LieAutomorphism(ab2, Mat::identity(2))};
        CHECK(component_invariants(ab2, id).dim() == 1);
    }
    SECTION("the coordinate swap acts by -1 on the top wedge")
    {
        std::vector<LieAutomorphism> sw{LieAutomorphism(ab2, Mat{{0, 1}, {1, 0}})};
        CHECK(component_invariants(ab2, sw).dim() == 0);
    }
    SECTION("-identity acts trivially on Lambda^2")
    {
        std::vector<LieAutomorphism> neg{LieAutomorphism(ab2, Mat{{-1, 0}, {0, -1}})};
        CHECK(component_invariants(ab2, neg).dim() == 1);
    }
    SECTION("the fixed space is fixed pointwise by every induced map")
    {
        LieAlgebra ab4 = catalog::abelian(4).algebra;
        Mat rot(4, 4); // cyclic coordinate rotation
        rot(0, 3) = 1;
        rot(1, 0) = 1;
        rot(2, 1) = 1;
        rot(3, 2) = 1;
        std::vector<LieAutomorphism> gens{LieAutomorphism(ab4, rot)};
        Subspace fixed = component_invariants(ab4, gens);
        CHECK(fixed.dim() < 6);
        QuotientSpace q = ab4.abelianization();
        Mat rho = q.q * rot * q.section;
        for (int r = 0; r < fixed.dim(); ++r) {
            AltBilinearForm f =
                AltBilinearForm::from_pair_coords(4, fixed.basis_vector(r), kATag);
            Mat acted = rho.transpose() * f.coeffs() * rho;
            CHECK(acted == f.coeffs());
        }
    }
}

TEST_CASE("pullback_injectivity_check")
{
    CHECK(pullback_injectivity_check(Mat::identity(3)));
    CHECK(pullback_injectivity_check(Mat{{1, 0, 0}, {0, 1, 0}})); // projection Q^3 -> Q^2
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 2 + static_cast<int>(rng() % 3);
        int n = m + static_cast<int>(rng() % 3);
        Mat q(m, n);
        do {
            q = testutil::random_mat(rng, m, n);
        } while (rank(q) != m);
        CHECK(pullback_injectivity_check(q));
    }
    Mat with_zero_row(2, 3);
    with_zero_row(0, 0) = 1;
    CHECK_THROWS_AS(pullback_injectivity_check(with_zero_row), std::invalid_argument);
}
