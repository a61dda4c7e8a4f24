#pragma once

// Dense row-major matrix and Bareiss fraction-free elimination over mpz.

#include "ihg/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ihg {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Result of eliminating a square system M x = B with several right-hand sides.
struct ExactSolve {
    Rational determinant;
    std::optional<RationalMatrix> solution; // n x k, absent when singular
};

/// Solves M X = B exactly. Each row of [M | B] is first scaled by the lcm of
/// its denominators so elimination runs on integers (Bareiss), then the
/// determinant of M is recovered by dividing out the row scales.
inline ExactSolve solve_exact(const RationalMatrix& m, const RationalMatrix& rhs) {
    const std::size_t n = m.rows();
    const std::size_t k = rhs.cols();
    assert(m.cols() == n && rhs.rows() == n);

    Matrix<mpz_class> work(n, n + k);
    mpz_class scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < k; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs(i, j).get_den_mpz_t());
        scale_product *= lcm;
        for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j).get_num() * (lcm / m(i, j).get_den());
        for (std::size_t j = 0; j < k; ++j) work(i, n + j) = rhs(i, j).get_num() * (lcm / rhs(i, j).get_den());
    }

    int sign = 1;
    mpz_class previous_pivot = 1;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot_row = p;
        while (pivot_row < n && work(pivot_row, p) == 0) ++pivot_row;
        if (pivot_row == n) return {Rational(0), std::nullopt};
        if (pivot_row != p) {
            work.swap_rows(pivot_row, p);
            sign = -sign;
        }
        const mpz_class pivot = work(p, p);
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n + k; ++j) {
                mpz_class t = work(i, j) * pivot - work(i, p) * work(p, j);
                mpz_divexact(work(i, j).get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
            }
            work(i, p) = 0;
        }
        previous_pivot = pivot;
    }

    // After Bareiss the last pivot is the determinant of the scaled matrix.
    Rational det(n == 0 ? mpz_class(1) : mpz_class(sign * work(n - 1, n - 1)), scale_product);
    det.canonicalize();

    RationalMatrix x(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Rational sum(work(i, n + c));
            for (std::size_t j = i + 1; j < n; ++j) sum -= Rational(work(i, j)) * x(j, c);
            x(i, c) = sum / Rational(work(i, i));
        }
    }
    return {det, std::move(x)};
}

inline Rational determinant(const RationalMatrix& m) { return solve_exact(m, RationalMatrix(m.rows(), 0)).determinant; }

} // namespace ihg
