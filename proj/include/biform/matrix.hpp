#pragma once

#include <biform/rational.hpp>

#include <cassert>
#include <initializer_list>
#include <vector>

namespace biform {

using Vec = std::vector<Rat>;

/// Dense rational matrix, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols)
    {
        assert(rows >= 0 && cols >= 0);
    }
    Mat(std::initializer_list<std::initializer_list<Rat>> grid)
    {
        rows_ = static_cast<int>(grid.size());
        cols_ = rows_ ? static_cast<int>(grid.begin()->size()) : 0;
        e_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : grid) {
            assert(static_cast<int>(row.size()) == cols_);
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat from_rows(int cols, const std::vector<Vec>& rows)
    {
        Mat m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows(); ++i) {
            assert(static_cast<int>(rows[i].size()) == cols);
            for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j)
    {
        assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Rat& operator()(int i, int j) const
    {
        assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Vec row(int i) const
    {
        Vec r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Mat operator*(const Rat& s, const Mat& a)
    {
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b)
    {
        assert(a.cols_ == b.rows_);
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }

    Vec apply(const Vec& x) const
    {
        assert(static_cast<int>(x.size()) == cols_);
        Vec y(rows_);
        for (int i = 0; i < rows_; ++i) {
            Rat acc = 0;
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) acc += (*this)(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

inline bool is_zero_vec(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace biform
