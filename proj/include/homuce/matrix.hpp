#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "homuce/errors.hpp"
#include "homuce/scalar.hpp"

namespace homuce {

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline void add_mul(Scalar& acc, const Scalar& x, const Scalar& y) { acc.add_mul(x, y); }
inline void add_mul(Rational& acc, const Rational& x, const Rational& y) { acc += x * y; }

template <class T>
using BasicVector = std::vector<T>;

using Vector = BasicVector<Scalar>;

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols) throw DimensionMismatch("matrix entry count != rows*cols");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, const std::vector<BasicVector<T>>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(std::size_t cols, const std::vector<BasicVector<T>>& rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const {
        return std::span<const T>(data_.data() + i * cols_, cols_);
    }
    BasicVector<T> row_vector(std::size_t i) const { return BasicVector<T>(row(i).begin(), row(i).end()); }
    BasicVector<T> column(std::size_t j) const {
        BasicVector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const BasicVector<T>& v) {
        if (v.size() != rows_) throw DimensionMismatch("set_column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }
    const std::vector<T>& entries() const { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return homuce::is_zero(x); });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    BasicVector<T> apply(std::span<const T> v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
        BasicVector<T> out(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (homuce::is_zero(v[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const T& a = (*this)(i, j);
                if (!homuce::is_zero(a)) homuce::add_mul(out[i], a, v[j]);
            }
        }
        return out;
    }
    BasicVector<T> apply(const BasicVector<T>& v) const { return apply(std::span<const T>(v)); }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (homuce::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!homuce::is_zero(bkj)) homuce::add_mul(c(i, j), aik, bkj);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
        }
        return os << "]";
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Mat = Matrix<Scalar>;

/// Kronecker product; (A ⊗ B)(e_i ⊗ f_j) = A e_i ⊗ B f_j in lexicographic order.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& aij = a(i, j);
            if (is_zero(aij)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const T& bkl = b(k, l);
                    if (!is_zero(bkl)) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return out;
}

template <class T>
struct RrefResult {
    Matrix<T> reduced;  // nonzero rows only
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Zero rows are dropped from the result.
template <class T>
RrefResult<T> rref_with_pivots(const Matrix<T>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<T>> a(rows);
    for (std::size_t i = 0; i < rows; ++i) a[i] = m.row_vector(i);

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const T inv = T(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(a[r][j])) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            const T f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(a[r][j])) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return {Matrix<T>::from_rows(cols, a), std::move(pivots)};
}

template <class T>
Matrix<T> rref(const Matrix<T>& m) {
    return rref_with_pivots(m).reduced;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref_with_pivots(m).pivots.size();
}

/// Basis of the null space, one vector per free column (not yet reduced).
template <class T>
std::vector<BasicVector<T>> null_space_basis(const Matrix<T>& m) {
    const auto [red, pivots] = rref_with_pivots(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<BasicVector<T>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BasicVector<T> v(cols);
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

/// One solution x of m x = b, or nothing when the system is inconsistent.
/// Free variables are set to zero, which makes the choice canonical.
template <class T>
std::optional<BasicVector<T>> particular_solution(const Matrix<T>& m, const BasicVector<T>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("rhs length mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto [red, pivots] = rref_with_pivots(aug);
    BasicVector<T> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt;
        x[pivots[r]] = red(r, m.cols());
    }
    return x;
}

template <class T>
bool is_zero_vector(const BasicVector<T>& v) {
    return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero(x); });
}

template <class T>
BasicVector<T> axpy(const T& a, const BasicVector<T>& x, BasicVector<T> y) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!is_zero(x[i])) y[i] += a * x[i];
    return y;
}

inline Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v[k] = Scalar(1);
    return v;
}

}  // namespace homuce
