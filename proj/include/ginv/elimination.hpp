#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace ginv {

template <Field T>
struct Echelon {
    Matrix<T> reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

// Gauss-Jordan elimination to reduced row echelon form.
//
// Rational mode takes the first nonzero entry of each column as pivot and is
// exact. Float mode uses partial pivoting and accepts a pivot only when its
// magnitude exceeds tol.rel * max|a|; entries under that threshold are
// flushed to zero so the returned form is clean.
template <Field T>
Echelon<T> reduced_row_echelon(const Matrix<T>& a, const Tolerance& tol = {}) {
    using traits = scalar_traits<T>;
    Echelon<T> e{a, {}};
    Matrix<T>& r = e.reduced;
    const double scale = a.max_abs();
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t piv = r.rows();
        if constexpr (traits::exact) {
            for (std::size_t i = row; i < r.rows(); ++i)
                if (r(i, col) != 0) { piv = i; break; }
        } else {
            double best = 0.0;
            for (std::size_t i = row; i < r.rows(); ++i) {
                const double m = traits::magnitude(r(i, col));
                if (m > best) { best = m; piv = i; }
            }
            if (piv != r.rows() && traits::is_zero(r(piv, col), tol, scale)) piv = r.rows();
        }
        if (piv == r.rows()) {
            if constexpr (!traits::exact)
                for (std::size_t i = row; i < r.rows(); ++i) r(i, col) = T(0);
            continue;
        }
        if (piv != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(row, j));

        const T inv = T(1) / r(row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
        r(row, col) = T(1);

        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col) == 0) continue;
            const T f = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
            r(i, col) = T(0);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

template <Field T>
std::size_t rank(const Matrix<T>& a, const Tolerance& tol = {}) {
    return reduced_row_echelon(a, tol).rank();
}

// A = F * G with F (m x r) of full column rank, G (r x n) of full row rank.
template <Field T>
struct RankFactorization {
    Matrix<T> f;
    Matrix<T> g;
    std::size_t rank = 0;
};

// F is the pivot columns of A, G the nonzero rows of rref(A). The zero matrix
// gives rank 0 with F of shape m x 0 and G of shape 0 x n.
template <Field T>
RankFactorization<T> rank_factorize(const Matrix<T>& a, const Tolerance& tol = {}) {
    auto e = reduced_row_echelon(a, tol);
    const std::size_t r = e.rank();
    return {a.columns(e.pivot_cols), e.reduced.block(0, 0, r, a.cols()), r};
}

// Inverse of a square matrix, or nullopt when singular.
template <Field T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a, const Tolerance& tol = {}) {
    if (!a.is_square()) throw dimension_error("inverse of non-square " + a.shape());
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix<T>::identity(n));
    // Pivot tolerance must be judged against a alone, not the appended identity.
    Tolerance t = tol;
    if constexpr (!scalar_traits<T>::exact) {
        const double sa = a.max_abs();
        if (sa > 0.0 && sa < 1.0) t.rel = tol.rel * sa;
    }
    auto e = reduced_row_echelon(aug, t);
    if (e.rank() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

template <Field T>
struct LinearSolution {
    bool consistent = false;
    Matrix<T> particular;               // column, free variables set to zero
    std::vector<Matrix<T>> null_basis;  // columns spanning ker(A)
};

// Solves A x = b for a single right-hand column. When inconsistent, the
// reduced augmented system carries a pivot in the right-hand column, which is
// the certificate of infeasibility.
template <Field T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol = {}) {
    if (b.cols() != 1 || b.rows() != a.rows())
        throw dimension_error("solve_linear: A is " + a.shape() + ", b is " + b.shape());
    const std::size_t n = a.cols();
    Matrix<T> aug(a.rows(), n + 1);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, b);
    auto e = reduced_row_echelon(aug, tol);

    LinearSolution<T> out;
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return out;
    out.consistent = true;
    out.particular = Matrix<T>(n, 1);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        out.particular(e.pivot_cols[i], 0) = e.reduced(i, n);
        is_pivot[e.pivot_cols[i]] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Matrix<T> v(n, 1);
        v(f, 0) = T(1);
        for (std::size_t i = 0; i < e.rank(); ++i) v(e.pivot_cols[i], 0) = -e.reduced(i, f);
        out.null_basis.push_back(std::move(v));
    }
    return out;
}

} // namespace ginv
