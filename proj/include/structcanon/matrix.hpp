#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace structcanon {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

/// Half-open index ranges addressing a submatrix.
struct BlockIndex {
    std::size_t row_start = 0;
    std::size_t row_end = 0;
    std::size_t col_start = 0;
    std::size_t col_end = 0;

    std::size_t rows() const { return row_end - row_start; }
    std::size_t cols() const { return col_end - col_start; }
};

/// Dense complex matrix, row-major storage.
///
/// Matrices are plain values: every operation returns a fresh matrix except
/// the in-place rotation helpers in transform.hpp, which the Jacobi sweeps
/// use to avoid quadratic copying.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
        if (a_.size() != rows * cols)
            throw std::invalid_argument("Matrix: entry count does not match dimensions");
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::vector<Complex>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Complex& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return a_[i * cols_ + j];
    }
    const Complex& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return a_[i * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return a_; }

    bool is_finite() const {
        for (const Complex& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("Matrix: index (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") out of range for " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

inline Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("Matrix addition: shape mismatch");
    Matrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("Matrix subtraction: shape mismatch");
    Matrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

inline Matrix operator*(const Complex& z, const Matrix& x) {
    Matrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = z * x(i, j);
    return r;
}

inline Matrix operator-(const Matrix& x) { return Complex{-1.0, 0.0} * x; }

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + " do not match");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
    Matrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

/// Frobenius norm of the matrix with its diagonal zeroed.
inline double off_diagonal_norm(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("off_diagonal_norm: matrix must be square");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

/// J = [[0, I_n], [-I_n, 0]], the 2n x 2n symplectic unit.
inline Matrix j_matrix(std::size_t n) {
    Matrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, n + i) = 1.0;
        m(n + i, i) = -1.0;
    }
    return m;
}

/// F_m, the flip matrix with ones on the antidiagonal.
inline Matrix f_matrix(std::size_t m) {
    Matrix f(m, m);
    for (std::size_t i = 0; i < m; ++i) f(i, m - 1 - i) = 1.0;
    return f;
}

inline void check_block(const Matrix& a, const BlockIndex& idx) {
    if (idx.row_start >= idx.row_end || idx.col_start >= idx.col_end)
        throw std::out_of_range("block: empty range");
    if (idx.row_end > a.rows() || idx.col_end > a.cols())
        throw std::out_of_range("block: range exceeds matrix bounds");
}

inline Matrix block_get(const Matrix& a, const BlockIndex& idx) {
    check_block(a, idx);
    Matrix r(idx.rows(), idx.cols());
    for (std::size_t i = 0; i < idx.rows(); ++i)
        for (std::size_t j = 0; j < idx.cols(); ++j)
            r(i, j) = a(idx.row_start + i, idx.col_start + j);
    return r;
}

inline Matrix block_set(const Matrix& a, const BlockIndex& idx, const Matrix& b) {
    check_block(a, idx);
    if (b.rows() != idx.rows() || b.cols() != idx.cols())
        throw std::invalid_argument("block_set: block shape does not match range");
    Matrix r = a;
    for (std::size_t i = 0; i < idx.rows(); ++i)
        for (std::size_t j = 0; j < idx.cols(); ++j)
            r(idx.row_start + i, idx.col_start + j) = b(i, j);
    return r;
}

/// Multiply a vector seen as a column of length a.cols().
inline std::vector<Complex> mat_vec(const Matrix& a, const std::vector<Complex>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<Complex> r(a.rows(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

inline double max_abs(const Matrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace structcanon
