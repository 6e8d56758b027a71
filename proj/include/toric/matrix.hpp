#pragma once

#include "toric/numeric.hpp"

#include <cassert>
#include <cstddef>

namespace toric {

// Dense row-major matrix over an exact scalar.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty())
            return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == m.cols_);
            for (size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols)
    {
        if (cols.empty())
            return Matrix(0, 0);
        Matrix m(cols[0].size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            assert(cols[j].size() == m.rows_);
            for (size_t i = 0; i < m.rows_; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const
    {
        std::vector<T> r(cols_);
        for (size_t j = 0; j < cols_; ++j)
            r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> col(size_t j) const
    {
        std::vector<T> c(rows_);
        for (size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void swap_rows(size_t i, size_t k)
    {
        for (size_t j = 0; j < cols_; ++j)
            std::swap((*this)(i, j), (*this)(k, j));
    }

    void swap_cols(size_t j, size_t l)
    {
        for (size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, j), (*this)(i, l));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        assert(cols_ == o.rows_);
        Matrix p(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0)
                    continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    p(i, j) += (*this)(i, k) * o(k, j);
            }
        return p;
    }

    std::vector<T> operator*(const std::vector<T>& v) const
    {
        assert(v.size() == cols_);
        std::vector<T> r(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            T s = T(0);
            for (size_t j = 0; j < cols_; ++j)
                s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rat(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rat(m(i, j));
    return r;
}

}  // namespace toric
