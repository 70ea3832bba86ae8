#pragma once

#include <biform/linalg.hpp>

#include <array>
#include <string>
#include <vector>

namespace biform {

/// Finite-dimensional Lie algebra over the rationals, presented by structure
/// constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// Antisymmetry of the tensor is always enforced at construction. The Jacobi
/// identity is checked by default but can be skipped (fuzz tests build
/// deliberately broken tensors and inspect them with check_jacobi()).
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    LieAlgebra(int dim, std::vector<Rat> structure, std::string name = "",
               bool validate_jacobi = true)
        : dim_(dim), c_(std::move(structure)), name_(std::move(name))
    {
        if (dim < 0 || c_.size() != cube(dim))
            throw std::invalid_argument("LieAlgebra: structure tensor has wrong size");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j <= i; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != -c(j, i, k))
                        throw std::invalid_argument(
                            "LieAlgebra: structure tensor is not antisymmetric");
        if (validate_jacobi) {
            auto bad = check_jacobi();
            if (!bad.empty()) {
                auto [i, j, k] = bad.front();
                throw std::invalid_argument("LieAlgebra: Jacobi identity fails on (e" +
                                            std::to_string(i) + ", e" + std::to_string(j) +
                                            ", e" + std::to_string(k) + ")");
            }
        }
    }

    // Builder interface: set [e_i, e_j] one pair at a time (i < j), then seal.
    class Builder {
    public:
        explicit Builder(int dim) : dim_(dim), c_(cube(dim)) {}
        Builder& bracket(int i, int j, int k, const Rat& coeff)
        {
            if (!(0 <= i && i < dim_ && 0 <= j && j < dim_ && 0 <= k && k < dim_))
                throw std::invalid_argument("Builder: basis index out of range");
            if (i == j && coeff != 0)
                throw std::invalid_argument("Builder: [e_i, e_i] must vanish");
            at(i, j, k) += coeff;
            at(j, i, k) -= coeff;
            return *this;
        }
        LieAlgebra build(std::string name = "", bool validate_jacobi = true) const
        {
            return LieAlgebra(dim_, c_, std::move(name), validate_jacobi);
        }

    private:
        Rat& at(int i, int j, int k)
        {
            return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
        }
        int dim_;
        std::vector<Rat> c_;
    };

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const Rat& c(int i, int j, int k) const
    {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    Vec bracket_basis(int i, int j) const
    {
        Vec v(dim_);
        for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    Vec bracket(const Vec& x, const Vec& y) const
    {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw std::invalid_argument("bracket: vector length mismatch");
        Vec z(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                const Rat f = x[i] * y[j];
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != 0) z[k] += f * c(i, j, k);
            }
        }
        return z;
    }

    /// Triples i < j < k violating [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
    std::vector<std::array<int, 3>> check_jacobi() const
    {
        // accumulate [[e_a, e_b], e_k] into s, touching only nonzero c(a,b,l)
        auto add_triple = [this](int a, int b, int k, Vec& s) {
            for (int l = 0; l < dim_; ++l) {
                const Rat& cl = c(a, b, l);
                if (cl == 0) continue;
                for (int m = 0; m < dim_; ++m)
                    if (c(l, k, m) != 0) s[m] += cl * c(l, k, m);
            }
        };
        std::vector<std::array<int, 3>> bad;
        Vec s(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = j + 1; k < dim_; ++k) {
                    std::fill(s.begin(), s.end(), Rat(0));
                    add_triple(i, j, k, s);
                    add_triple(j, k, i, s);
                    add_triple(k, i, j, s);
                    if (!is_zero_vec(s)) bad.push_back({i, j, k});
                }
        return bad;
    }

    /// [g, g], spanned by the pairwise basis brackets.
    Subspace derived_subalgebra() const
    {
        std::vector<Vec> spans;
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j) {
                Vec v = bracket_basis(i, j);
                if (!is_zero_vec(v)) spans.push_back(std::move(v));
            }
        return Subspace::span_of(dim_, spans);
    }

    /// [g, [g, g]], the second term of the lower central series.
    Subspace second_lcs_term() const
    {
        Subspace der = derived_subalgebra();
        std::vector<Vec> spans;
        for (int i = 0; i < dim_; ++i)
            for (int r = 0; r < der.dim(); ++r) {
                Vec ei(dim_);
                ei[i] = 1;
                Vec v = bracket(ei, der.basis_vector(r));
                if (!is_zero_vec(v)) spans.push_back(std::move(v));
            }
        return Subspace::span_of(dim_, spans);
    }

    /// Quotient onto a = g/[g,g], with a section of the projection.
    QuotientSpace abelianization() const { return quotient_data(derived_subalgebra()); }

    /// Matrix of ad_z : x -> [z, x].
    Mat ad(const Vec& z) const
    {
        if (static_cast<int>(z.size()) != dim_)
            throw std::invalid_argument("ad: vector length mismatch");
        Mat a(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Vec ej(dim_);
            ej[j] = 1;
            Vec col = bracket(z, ej);
            for (int k = 0; k < dim_; ++k) a(k, j) = col[k];
        }
        return a;
    }

    bool is_automorphism(const Mat& phi) const
    {
        if (phi.rows() != dim_ || phi.cols() != dim_) return false;
        if (rank(phi) != dim_) return false;
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j) {
                Vec lhs = phi.apply(bracket_basis(i, j));
                Vec rhs = bracket(phi_col(phi, i), phi_col(phi, j));
                if (lhs != rhs) return false;
            }
        return true;
    }

private:
    static std::size_t cube(int n)
    {
        return static_cast<std::size_t>(n) * n * n;
    }
    static Vec phi_col(const Mat& phi, int j)
    {
        Vec v(phi.rows());
        for (int i = 0; i < phi.rows(); ++i) v[i] = phi(i, j);
        return v;
    }

    int dim_;
    std::vector<Rat> c_;
    std::string name_;
};

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    const int n = a.dim() + b.dim();
    LieAlgebra::Builder bld(n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != 0) bld.bracket(i, j, k, a.c(i, j, k));
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i + 1; j < b.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k)
                if (b.c(i, j, k) != 0)
                    bld.bracket(a.dim() + i, a.dim() + j, a.dim() + k, b.c(i, j, k));
    std::string name;
    if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
    return bld.build(std::move(name));
}

/// An invertible matrix commuting with the bracket; construction validates.
class LieAutomorphism {
public:
    LieAutomorphism(const LieAlgebra& L, Mat matrix) : matrix_(std::move(matrix))
    {
        if (!L.is_automorphism(matrix_))
            throw std::invalid_argument(
                "LieAutomorphism: matrix does not preserve the bracket");
    }
    const Mat& matrix() const { return matrix_; }

private:
    Mat matrix_;
};

} // namespace biform
