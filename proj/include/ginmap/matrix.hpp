#ifndef GINMAP_MATRIX_HPP
#define GINMAP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ginmap/errors.hpp"

namespace ginmap {

// Dense matrix over an exact field F.  F must be default-constructible to
// zero, constructible from int, and support +, -, *, / and ==.  Pivoting is
// first-nonzero (no magnitude comparisons exist for the fields used here),
// which also keeps every elimination deterministic.
template <typename F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(i, j), (*this)(k, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& a = (*this)(i, k);
                if (a == F(0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) = out(i, j) + a * rhs(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw DimensionError("matrix sum: shapes differ");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw DimensionError("matrix difference: shapes differ");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
        return out;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw DimensionError("matrix apply: vector length differs");
        std::vector<F> out(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<F> data_;
};

// Forward elimination to row-echelon form.  Returns the pivot columns in the
// order they were found (strictly increasing).
template <typename F>
std::vector<std::size_t> row_echelon(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == F(0)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const F inv_pivot = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv_pivot;
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const F factor = m(i, c);
            if (factor == F(0)) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Full reduced row-echelon form.
template <typename F>
std::vector<std::size_t> reduced_row_echelon(Matrix<F>& m) {
    std::vector<std::size_t> pivots = row_echelon(m);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const F factor = m(i, c);
            if (factor == F(0)) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(k, j);
        }
    }
    return pivots;
}

template <typename F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant: matrix not square");
    const std::size_t n = m.rows();
    F det = F(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == F(0)) ++p;
        if (p == n) return F(0);
        if (p != c) {
            m.swap_rows(c, p);
            det = F(0) - det;
        }
        det = det * m(c, c);
        const F inv_pivot = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const F factor = m(i, c) * inv_pivot;
            if (factor == F(0)) continue;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - factor * m(c, j);
        }
    }
    return det;
}

template <typename F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    const std::vector<std::size_t> pivots = reduced_row_echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <typename F>
Matrix<F> inverse(const Matrix<F>& m) {
    auto inv = try_inverse(m);
    if (!inv) throw ZeroDivisionError("inverse: singular matrix");
    return *inv;
}

// Exact solve of A x = b.  Returns nullopt when the system is inconsistent;
// free variables, if any, are set to zero.
template <typename F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
    if (b.size() != a.rows()) throw DimensionError("solve: rhs length differs");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = reduced_row_echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;  // pivot in the rhs column
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
    return x;
}

}  // namespace ginmap

#endif
