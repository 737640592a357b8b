#pragma once

#include <optional>

#include "elimination.hpp"

// Brute-force ground truth: each matrix equation is rewritten as one linear
// system in the entries of its unknowns and solved by exact elimination.
//
// vec() stacks ROWS: vec(X)[i*m + j] = X(i, j). Under this convention
//   vec(A X)   = (A (x) I_m)   vec(X)
//   vec(X B)   = (I_n (x) B^T) vec(X)
//   vec(A X B) = (A (x) B^T)   vec(X)
// for X of shape n x m.

namespace ginv::oracle {

template <Field T>
Matrix<T> vec(const Matrix<T>& m) {
    return Matrix<T>(m.size(), 1, std::vector<T>(m.data().begin(), m.data().end()));
}

template <Field T>
Matrix<T> unvec(const Matrix<T>& v, std::size_t rows, std::size_t cols, std::size_t offset = 0) {
    if (v.cols() != 1 || offset + rows * cols > v.rows()) throw dimension_error("unvec out of range");
    return Matrix<T>(rows, cols,
                     std::vector<T>(v.data().begin() + static_cast<std::ptrdiff_t>(offset),
                                    v.data().begin() + static_cast<std::ptrdiff_t>(offset + rows * cols)));
}

template <Field T>
struct VectorizedSystem {
    Matrix<T> coefficient;
    Matrix<T> rhs;
    std::size_t unknown_rows = 0;
    std::size_t unknown_cols = 0;
    std::size_t unknown_count = 1;  // matrix unknowns stacked in order
};

namespace detail {

template <Field T>
void require_shapes(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    if (!a.is_square() || !b.is_square() || c.rows() != a.rows() || c.cols() != b.rows())
        throw dimension_error("need A n x n, B m x m, C n x m; got A " + a.shape() + ", B " + b.shape() + ", C " +
                              c.shape());
}

} // namespace detail

// A X - X B = C
template <Field T>
VectorizedSystem<T> sylvester_system(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    detail::require_shapes(a, b, c);
    const auto n = a.rows(), m = b.rows();
    return {kron(a, Matrix<T>::identity(m)) - kron(Matrix<T>::identity(n), b.transpose()), vec(c), n, m, 1};
}

// A X - Y B = C, unknown vector [vec X; vec Y]
template <Field T>
VectorizedSystem<T> two_sided_system(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    detail::require_shapes(a, b, c);
    const auto n = a.rows(), m = b.rows();
    Matrix<T> k(n * m, 2 * n * m);
    k.set_block(0, 0, kron(a, Matrix<T>::identity(m)));
    k.set_block(0, n * m, -kron(Matrix<T>::identity(n), b.transpose()));
    return {k, vec(c), n, m, 2};
}

// A Y B - Y = C
template <Field T>
VectorizedSystem<T> stein_system(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    detail::require_shapes(a, b, c);
    const auto n = a.rows(), m = b.rows();
    return {kron(a, b.transpose()) - Matrix<T>::identity(n * m), vec(c), n, m, 1};
}

template <Field T>
LinearSolution<T> solve(const VectorizedSystem<T>& s, const Tolerance& tol = {}) {
    return solve_linear(s.coefficient, s.rhs, tol);
}

template <Field T>
std::optional<Matrix<T>> oracle_sylvester(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                          const Tolerance& tol = {}) {
    const auto s = sylvester_system(a, b, c);
    const auto sol = solve(s, tol);
    if (!sol.consistent) return std::nullopt;
    return unvec(sol.particular, s.unknown_rows, s.unknown_cols);
}

template <Field T>
struct TwoSidedPair {
    Matrix<T> x;
    Matrix<T> y;
};

template <Field T>
std::optional<TwoSidedPair<T>> oracle_two_sided(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                                const Tolerance& tol = {}) {
    const auto s = two_sided_system(a, b, c);
    const auto sol = solve(s, tol);
    if (!sol.consistent) return std::nullopt;
    const auto n = s.unknown_rows, m = s.unknown_cols;
    return TwoSidedPair<T>{unvec(sol.particular, n, m), unvec(sol.particular, n, m, n * m)};
}

template <Field T>
std::optional<Matrix<T>> oracle_stein(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                      const Tolerance& tol = {}) {
    const auto s = stein_system(a, b, c);
    const auto sol = solve(s, tol);
    if (!sol.consistent) return std::nullopt;
    return unvec(sol.particular, s.unknown_rows, s.unknown_cols);
}

} // namespace ginv::oracle
