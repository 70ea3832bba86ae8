#pragma once

#include <biform/linalg.hpp>

#include <sstream>
#include <string>

namespace biform {

// Coefficient indexing of Lambda^2: lexicographic pairs (i, j) with i < j.
// Every module that flattens a 2-form to a coefficient vector uses this
// order, so coefficient vectors are interchangeable across modules.
inline int pair_count(int n) { return n * (n - 1) / 2; }

inline int pair_index(int i, int j, int n)
{
    assert(0 <= i && i < j && j < n);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::pair<int, int> pair_from_index(int idx, int n)
{
    assert(0 <= idx && idx < pair_count(n));
    for (int i = 0;; ++i) {
        const int block = n - 1 - i;
        if (idx < block) return {i, i + 1 + idx};
        idx -= block;
    }
}

/// Alternating bilinear form given by its skew-symmetric coefficient matrix
/// in a declared basis ("g" for the Lie algebra, "a" for its abelianization).
class AltBilinearForm {
public:
    AltBilinearForm() = default;
    AltBilinearForm(Mat coeffs, std::string basis_tag)
        : dim_(coeffs.rows()), coeffs_(std::move(coeffs)), tag_(std::move(basis_tag))
    {
        if (coeffs_.rows() != coeffs_.cols())
            throw std::invalid_argument("AltBilinearForm: coefficient matrix not square");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j <= i; ++j)
                if (coeffs_(i, j) != -coeffs_(j, i))
                    throw std::invalid_argument("AltBilinearForm: matrix not skew-symmetric");
    }

    static AltBilinearForm zero(int dim, std::string basis_tag)
    {
        return AltBilinearForm(Mat::zero(dim, dim), std::move(basis_tag));
    }

    static AltBilinearForm from_pair_coords(int dim, const Vec& u, std::string basis_tag)
    {
        if (static_cast<int>(u.size()) != pair_count(dim))
            throw std::invalid_argument("AltBilinearForm: wrong pair-coordinate length");
        Mat c(dim, dim);
        for (int idx = 0; idx < pair_count(dim); ++idx) {
            auto [i, j] = pair_from_index(idx, dim);
            c(i, j) = u[idx];
            c(j, i) = -u[idx];
        }
        return AltBilinearForm(std::move(c), std::move(basis_tag));
    }

    // Elementary form e_i* ^ e_j*, the (i,j) pair-basis vector.
    static AltBilinearForm wedge(int dim, int i, int j, std::string basis_tag)
    {
        Vec u(pair_count(dim));
        u[pair_index(i, j, dim)] = 1;
        return from_pair_coords(dim, u, std::move(basis_tag));
    }

    int dim() const { return dim_; }
    const Mat& coeffs() const { return coeffs_; }
    const std::string& basis_tag() const { return tag_; }

    Vec pair_coords() const
    {
        Vec u(pair_count(dim_));
        for (int idx = 0; idx < pair_count(dim_); ++idx) {
            auto [i, j] = pair_from_index(idx, dim_);
            u[idx] = coeffs_(i, j);
        }
        return u;
    }

    Rat eval(const Vec& x, const Vec& y) const
    {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw std::invalid_argument("AltBilinearForm::eval: dimension mismatch");
        Rat acc = 0;
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim_; ++j)
                if (coeffs_(i, j) != 0 && y[j] != 0) acc += x[i] * coeffs_(i, j) * y[j];
        }
        return acc;
    }

    bool is_zero() const { return coeffs_.is_zero(); }

    friend bool operator==(const AltBilinearForm& a, const AltBilinearForm& b)
    {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const AltBilinearForm& a, const AltBilinearForm& b)
    {
        return !(a == b);
    }

    // "e0*^e1* - 2 e1*^e3*"; "0" for the zero form.
    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (int idx = 0; idx < pair_count(dim_); ++idx) {
            auto [i, j] = pair_from_index(idx, dim_);
            const Rat& c = coeffs_(i, j);
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Rat a = rat_abs(c);
            if (a != 1) os << rational_to_string(a) << " ";
            os << "e" << i << "*^e" << j << "*";
        }
        if (first) return "0";
        return os.str();
    }

private:
    int dim_ = 0;
    Mat coeffs_;
    std::string tag_;
};

} // namespace biform
