#pragma once

#include <biform/lie_algebra.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace biform {

/// A named algebra together with its documented abelianization dimension
/// and, where one exists, an exact rational matrix realization of the basis
/// (bracket = matrix commutator, used by the numeric cross-check).
struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<std::vector<Mat>> realization;
    int expected_ab_dim = 0;
};

namespace catalog {

namespace detail {

// Complex rational matrix, kept as a real pair so everything stays exact.
struct CMat {
    Mat re, im;
    CMat(int n) : re(n, n), im(n, n) {}
    int n() const { return re.rows(); }

    friend CMat operator*(const CMat& a, const CMat& b)
    {
        CMat r(a.n());
        r.re = a.re * b.re - a.im * b.im;
        r.im = a.re * b.im + a.im * b.re;
        return r;
    }
    friend CMat operator-(const CMat& a, const CMat& b)
    {
        CMat r(a.n());
        r.re = a.re - b.re;
        r.im = a.im - b.im;
        return r;
    }

    // A + iB -> [[A, -B], [B, A]]; a faithful real representation, so
    // commutators computed on either side agree.
    Mat embed_real() const
    {
        const int m = n();
        Mat out(2 * m, 2 * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                out(i, j) = re(i, j);
                out(m + i, m + j) = re(i, j);
                out(i, m + j) = -im(i, j);
                out(m + i, j) = im(i, j);
            }
        return out;
    }
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

inline Vec vectorize(const Mat& m)
{
    Vec v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

// Structure constants of a matrix Lie algebra, by expanding all pairwise
// commutators in the given basis in one batched elimination. Throws if the
// basis is dependent or its span is not closed under the commutator.
inline LieAlgebra algebra_from_matrices(const std::vector<Mat>& basis, std::string name)
{
    const int n = static_cast<int>(basis.size());
    if (n == 0) return LieAlgebra(0, {}, std::move(name));
    const int m = basis[0].rows();
    const int flat = m * m;
    const int npairs = n * (n - 1) / 2;

    Mat aug(flat, n + npairs);
    for (int k = 0; k < n; ++k) {
        if (basis[k].rows() != m || basis[k].cols() != m)
            throw std::invalid_argument("algebra_from_matrices: mixed matrix sizes");
        Vec col = vectorize(basis[k]);
        for (int r = 0; r < flat; ++r) aug(r, k) = col[r];
    }
    {
        int p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p) {
                Vec col = vectorize(commutator(basis[i], basis[j]));
                for (int r = 0; r < flat; ++r) aug(r, n + p) = col[r];
            }
    }
    auto rr = rref(aug);
    for (int k = 0; k < n; ++k)
        if (rr.rank <= k || rr.pivot_cols[k] != k)
            throw std::invalid_argument("algebra_from_matrices: basis matrices are dependent");
    if (rr.rank != n)
        throw std::invalid_argument("algebra_from_matrices: span not closed under commutator");

    LieAlgebra::Builder bld(n);
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
            for (int k = 0; k < n; ++k)
                if (rr.reduced(k, n + p) != 0) bld.bracket(i, j, k, rr.reduced(k, n + p));
    return bld.build(std::move(name));
}

inline Mat unit_matrix(int m, int a, int b)
{
    Mat e(m, m);
    e(a, b) = 1;
    return e;
}

// Shared exit point: validates Jacobi (already done by LieAlgebra), the
// realization (independence + exact commutator identity), and the
// documented abelianization dimension against a fresh computation.
inline CatalogEntry finalize(std::string name, LieAlgebra algebra,
                             std::optional<std::vector<Mat>> realization, int expected_ab_dim)
{
    CatalogEntry e{std::move(name), std::move(algebra), std::move(realization),
                   expected_ab_dim};
    e.algebra.set_name(e.name);
    const int n = e.algebra.dim();
    if (e.realization) {
        const auto& R = *e.realization;
        if (static_cast<int>(R.size()) != n)
            throw std::logic_error("catalog: realization size mismatch for " + e.name);
        std::vector<Vec> stacked;
        for (const auto& mat : R) stacked.push_back(vectorize(mat));
        if (n > 0 && Subspace::span_of(static_cast<int>(stacked[0].size()), stacked).dim() != n)
            throw std::logic_error("catalog: realization matrices are dependent for " + e.name);
        const int m = R.empty() ? 0 : R[0].rows();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Mat expect(m, m);
                for (int k = 0; k < n; ++k) {
                    const Rat& coeff = e.algebra.c(i, j, k);
                    if (coeff == 0) continue;
                    for (int r = 0; r < m; ++r)
                        for (int s = 0; s < m; ++s)
                            if (R[k](r, s) != 0) expect(r, s) += coeff * R[k](r, s);
                }
                if (commutator(R[i], R[j]) != expect)
                    throw std::logic_error("catalog: realization does not reproduce the "
                                           "structure constants for " + e.name);
            }
    }
    if (e.algebra.abelianization().quotient_dim != e.expected_ab_dim)
        throw std::logic_error("catalog: documented abelianization dim is wrong for " + e.name);
    return e;
}

} // namespace detail

inline CatalogEntry abelian(int d)
{
    if (d < 0) throw std::invalid_argument("abelian(d): d must be nonnegative");
    LieAlgebra L(d, std::vector<Rat>(static_cast<std::size_t>(d) * d * d));
    std::optional<std::vector<Mat>> real;
    if (d > 0) {
        std::vector<Mat> diag;
        for (int i = 0; i < d; ++i) diag.push_back(detail::unit_matrix(d, i, i));
        real = std::move(diag);
    }
    return detail::finalize("abelian(" + std::to_string(d) + ")", std::move(L),
                            std::move(real), d);
}

/// Heisenberg algebra of odd dimension 2n+1: basis x_1..x_n, y_1..y_n, z
/// with [x_i, y_i] = z. Realized by strictly upper triangular (n+2)x(n+2).
inline CatalogEntry heisenberg(int dim)
{
    if (dim < 3 || dim % 2 == 0)
        throw std::invalid_argument("heisenberg(d): d must be odd and >= 3");
    const int n = (dim - 1) / 2;
    const int m = n + 2;
    std::vector<Mat> R;
    for (int i = 0; i < n; ++i) R.push_back(detail::unit_matrix(m, 0, 1 + i));
    for (int i = 0; i < n; ++i) R.push_back(detail::unit_matrix(m, 1 + i, n + 1));
    R.push_back(detail::unit_matrix(m, 0, n + 1));
    std::string name = "heisenberg(" + std::to_string(dim) + ")";
    LieAlgebra L = detail::algebra_from_matrices(R, name);
    return detail::finalize(std::move(name), std::move(L), std::move(R), 2 * n);
}

/// The nonabelian 2-dimensional algebra, [H, E] = E.
inline CatalogEntry aff1()
{
    std::vector<Mat> R{Mat{{1, 0}, {0, 0}}, Mat{{0, 1}, {0, 0}}};
    LieAlgebra L = detail::algebra_from_matrices(R, "aff(1)");
    return detail::finalize("aff(1)", std::move(L), std::move(R), 1);
}

/// su(2) in the cyclic basis [e0,e1] = e2, [e1,e2] = e0, [e2,e0] = e1,
/// realized by -(i/2) times the Pauli matrices, embedded as real 4x4.
inline CatalogEntry su2()
{
    using detail::CMat;
    const Rat h(1, 2);
    CMat x(2), y(2), z(2);
    x.im(0, 1) = -h;
    x.im(1, 0) = -h;
    y.re(0, 1) = -h;
    y.re(1, 0) = h;
    z.im(0, 0) = -h;
    z.im(1, 1) = h;
    std::vector<Mat> R{x.embed_real(), y.embed_real(), z.embed_real()};
    LieAlgebra L = detail::algebra_from_matrices(R, "su2");
    return detail::finalize("su2", std::move(L), std::move(R), 0);
}

/// sl(2) with basis h = diag(1,-1), e = E01, f = E10.
inline CatalogEntry sl2()
{
    std::vector<Mat> R{Mat{{1, 0}, {0, -1}}, Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}};
    LieAlgebra L = detail::algebra_from_matrices(R, "sl(2)");
    return detail::finalize("sl(2)", std::move(L), std::move(R), 0);
}

/// so(n), basis L_ab = E_ab - E_ba for a < b in lexicographic order.
inline CatalogEntry so(int n)
{
    if (n < 2) throw std::invalid_argument("so(n): n must be >= 2");
    std::vector<Mat> R;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            R.push_back(detail::unit_matrix(n, a, b) - detail::unit_matrix(n, b, a));
    std::string name = "so(" + std::to_string(n) + ")";
    LieAlgebra L = detail::algebra_from_matrices(R, name);
    // so(2) is the 1-dimensional (abelian) rotation algebra
    return detail::finalize(std::move(name), std::move(L), std::move(R), n >= 3 ? 0 : 1);
}

namespace detail {

// The rational-structure-constant basis of su(n): i(E_jj - E_{j+1,j+1}) for
// the Cartan part, then E_jk - E_kj and i(E_jk + E_kj) per pair j < k.
inline std::vector<CMat> su_basis_complex(int n)
{
    std::vector<CMat> B;
    for (int j = 0; j + 1 < n; ++j) {
        CMat h(n);
        h.im(j, j) = 1;
        h.im(j + 1, j + 1) = -1;
        B.push_back(std::move(h));
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            CMat a(n);
            a.re(j, k) = 1;
            a.re(k, j) = -1;
            B.push_back(std::move(a));
            CMat b(n);
            b.im(j, k) = 1;
            b.im(k, j) = 1;
            B.push_back(std::move(b));
        }
    return B;
}

} // namespace detail

/// su(n) for n >= 2, dimension n^2 - 1, realized as real 2n x 2n matrices.
inline CatalogEntry su(int n)
{
    if (n < 2) throw std::invalid_argument("su(n): n must be >= 2");
    std::vector<Mat> R;
    for (const auto& c : detail::su_basis_complex(n)) R.push_back(c.embed_real());
    std::string name = "su(" + std::to_string(n) + ")";
    LieAlgebra L = detail::algebra_from_matrices(R, name);
    return detail::finalize(std::move(name), std::move(L), std::move(R), 0);
}

/// u(n) = su(n) + R i.Id as a direct sum of Lie algebras; the realization
/// keeps the natural n x n complex picture (the center really is i.Id).
inline CatalogEntry u(int n)
{
    if (n < 1) throw std::invalid_argument("u(n): n must be >= 1");
    std::string name = "u(" + std::to_string(n) + ")";
    detail::CMat center(n);
    for (int i = 0; i < n; ++i) center.im(i, i) = 1;
    if (n == 1) {
        LieAlgebra L(1, std::vector<Rat>(1));
        std::vector<Mat> R{center.embed_real()};
        return detail::finalize(std::move(name), std::move(L), std::move(R), 1);
    }
    CatalogEntry su_part = su(n);
    LieAlgebra L = direct_sum(su_part.algebra, LieAlgebra(1, std::vector<Rat>(1)));
    std::vector<Mat> R = *su_part.realization;
    R.push_back(center.embed_real());
    return detail::finalize(std::move(name), std::move(L), std::move(R), 1);
}

/// gl(n), basis E_ab in row-major order; abelianization is the trace line.
inline CatalogEntry gl(int n)
{
    if (n < 1) throw std::invalid_argument("gl(n): n must be >= 1");
    std::vector<Mat> R;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) R.push_back(detail::unit_matrix(n, a, b));
    std::string name = "gl(" + std::to_string(n) + ")";
    LieAlgebra L = detail::algebra_from_matrices(R, name);
    return detail::finalize(std::move(name), std::move(L), std::move(R), 1);
}

/// Strictly upper triangular n x n matrices, basis E_ab (a < b) in
/// lexicographic order; nilpotent with abelianization of dimension n - 1.
inline CatalogEntry strictly_upper_triangular(int n)
{
    if (n < 2) throw std::invalid_argument("strictly_upper_triangular(n): n must be >= 2");
    std::vector<Mat> R;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) R.push_back(detail::unit_matrix(n, a, b));
    std::string name = "strictly_upper_triangular(" + std::to_string(n) + ")";
    LieAlgebra L = detail::algebra_from_matrices(R, name);
    return detail::finalize(std::move(name), std::move(L), std::move(R), n - 1);
}

inline CatalogEntry direct_sum_entry(const CatalogEntry& a, const CatalogEntry& b)
{
    LieAlgebra L = direct_sum(a.algebra, b.algebra);
    std::string name = "direct_sum(" + a.name + "," + b.name + ")";
    std::optional<std::vector<Mat>> real;
    if (a.realization && b.realization) {
        const int ma = (*a.realization)[0].rows();
        const int mb = (*b.realization)[0].rows();
        std::vector<Mat> R;
        for (const auto& A : *a.realization) {
            Mat blk(ma + mb, ma + mb);
            for (int i = 0; i < ma; ++i)
                for (int j = 0; j < ma; ++j) blk(i, j) = A(i, j);
            R.push_back(std::move(blk));
        }
        for (const auto& B : *b.realization) {
            Mat blk(ma + mb, ma + mb);
            for (int i = 0; i < mb; ++i)
                for (int j = 0; j < mb; ++j) blk(ma + i, ma + j) = B(i, j);
            R.push_back(std::move(blk));
        }
        real = std::move(R);
    }
    return detail::finalize(std::move(name), std::move(L), std::move(real),
                            a.expected_ab_dim + b.expected_ab_dim);
}

/// Semidirect sum g x| R^d for an action rho of g on R^d given by one d x d
/// matrix per basis element of g. The representation property
/// rho([e_i, e_j]) = [rho(e_i), rho(e_j)] is checked.
inline CatalogEntry semidirect(const CatalogEntry& g, int d, const std::vector<Mat>& action)
{
    const int n = g.algebra.dim();
    if (d < 0 || static_cast<int>(action.size()) != n)
        throw std::invalid_argument("semidirect: need one action matrix per basis element");
    for (const auto& A : action)
        if (A.rows() != d || A.cols() != d)
            throw std::invalid_argument("semidirect: action matrices must be d x d");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat lhs(d, d);
            for (int k = 0; k < n; ++k)
                if (g.algebra.c(i, j, k) != 0) lhs = lhs + g.algebra.c(i, j, k) * action[k];
            if (lhs != detail::commutator(action[i], action[j]))
                throw std::invalid_argument(
                    "semidirect: action is not a representation (pair " + std::to_string(i) +
                    "," + std::to_string(j) + ")");
        }
    LieAlgebra::Builder bld(n + d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.algebra.c(i, j, k) != 0) bld.bracket(i, j, k, g.algebra.c(i, j, k));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                if (action[i](b, a) != 0) bld.bracket(i, n + a, n + b, action[i](b, a));
    std::string name = "semidirect(" + g.name + ",abelian(" + std::to_string(d) + "))";
    LieAlgebra L = bld.build(name);
    const int ab = L.abelianization().quotient_dim;
    return detail::finalize(std::move(name), std::move(L), std::nullopt, ab);
}

} // namespace catalog

// --- CLI catalog grammar ----------------------------------------------
//
//   spec  := name | name '(' args ')'
//   args  := arg (',' arg)*
//   arg   := integer | spec
//
// Names: abelian(d), heisenberg(k), aff(1), su2, sl(2), so(n), su(n), u(n),
// gl(n), strictly_upper_triangular(n), direct_sum(spec, spec). Integer
// parameters are capped (d, n <= 8; heisenberg k <= 17) to keep exact
// arithmetic fast from the command line; library builders are uncapped.

struct CatalogParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace catalog::detail {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : s_(text) {}

    CatalogEntry parse()
    {
        CatalogEntry e = parse_spec();
        skip_ws();
        if (pos_ != s_.size())
            throw CatalogParseError("trailing input after algebra spec: '" +
                                    s_.substr(pos_) + "'");
        return e;
    }

private:
    CatalogEntry parse_spec()
    {
        skip_ws();
        std::string name = parse_name();
        std::vector<CatalogEntry> entry_args;
        std::vector<int> int_args;
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            while (true) {
                skip_ws();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    int_args.push_back(parse_int());
                } else {
                    entry_args.push_back(parse_spec());
                }
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == ')') {
                    ++pos_;
                    break;
                }
                throw CatalogParseError("expected ',' or ')' in algebra spec");
            }
        }
        return build(name, int_args, entry_args);
    }

    CatalogEntry build(const std::string& name, const std::vector<int>& ints,
                       const std::vector<CatalogEntry>& entries)
    {
        auto one_int = [&](int cap) {
            if (ints.size() != 1 || !entries.empty())
                throw CatalogParseError(name + " takes exactly one integer parameter");
            if (ints[0] > cap)
                throw CatalogParseError(name + " parameter exceeds the CLI cap of " +
                                        std::to_string(cap));
            return ints[0];
        };
        try {
            if (name == "abelian") return catalog::abelian(one_int(8));
            if (name == "heisenberg") return catalog::heisenberg(one_int(17));
            if (name == "aff") {
                if (one_int(8) != 1) throw CatalogParseError("only aff(1) is available");
                return catalog::aff1();
            }
            if (name == "su2") {
                if (!ints.empty() || !entries.empty())
                    throw CatalogParseError("su2 takes no parameters");
                return catalog::su2();
            }
            if (name == "sl") {
                if (one_int(8) != 2) throw CatalogParseError("only sl(2) is available");
                return catalog::sl2();
            }
            if (name == "so") return catalog::so(one_int(8));
            if (name == "su") return catalog::su(one_int(8));
            if (name == "u") return catalog::u(one_int(8));
            if (name == "gl") return catalog::gl(one_int(8));
            if (name == "strictly_upper_triangular")
                return catalog::strictly_upper_triangular(one_int(8));
            if (name == "direct_sum") {
                if (entries.size() != 2 || !ints.empty())
                    throw CatalogParseError("direct_sum takes exactly two algebra specs");
                return catalog::direct_sum_entry(entries[0], entries[1]);
            }
        } catch (const std::invalid_argument& e) {
            throw CatalogParseError(e.what());
        }
        throw CatalogParseError("unknown catalog algebra '" + name + "'");
    }

    std::string parse_name()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw CatalogParseError("expected an algebra name");
        return s_.substr(start, pos_ - start);
    }

    int parse_int()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        if (tok.empty() || tok.size() > 6) throw CatalogParseError("bad integer parameter");
        return std::stoi(tok);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace catalog::detail

inline CatalogEntry parse_catalog_spec(const std::string& text)
{
    return catalog::detail::SpecParser(text).parse();
}

} // namespace biform
