#pragma once

#include <cstddef>

#include "matrix.hpp"

namespace ginv {

// 2x2 operator matrix [[a11, a12], [a21, a22]] with conformable blocks.
template <Field T>
struct Block2x2 {
    Matrix<T> a11, a12, a21, a22;

    friend bool operator==(const Block2x2&, const Block2x2&) = default;
};

template <Field T>
Matrix<T> assemble(const Block2x2<T>& b) {
    const std::size_t top = b.a11.rows(), bottom = b.a21.rows();
    const std::size_t left = b.a11.cols(), right = b.a12.cols();
    if (b.a12.rows() != top || b.a22.rows() != bottom || b.a21.cols() != left || b.a22.cols() != right)
        throw dimension_error("non-conformable blocks: " + b.a11.shape() + ", " + b.a12.shape() + ", " +
                              b.a21.shape() + ", " + b.a22.shape());
    Matrix<T> m(top + bottom, left + right);
    m.set_block(0, 0, b.a11);
    m.set_block(0, left, b.a12);
    m.set_block(top, 0, b.a21);
    m.set_block(top, left, b.a22);
    return m;
}

template <Field T>
Block2x2<T> split(const Matrix<T>& m, std::size_t top_rows, std::size_t left_cols) {
    if (top_rows > m.rows() || left_cols > m.cols())
        throw dimension_error("cut (" + std::to_string(top_rows) + ", " + std::to_string(left_cols) +
                              ") out of range for " + m.shape());
    const std::size_t br = m.rows() - top_rows, rc = m.cols() - left_cols;
    return {m.block(0, 0, top_rows, left_cols), m.block(0, left_cols, top_rows, rc),
            m.block(top_rows, 0, br, left_cols), m.block(top_rows, left_cols, br, rc)};
}

// [[a, c], [0, b]]
template <Field T>
Matrix<T> upper_triangular(const Matrix<T>& a, const Matrix<T>& c, const Matrix<T>& b) {
    return assemble(Block2x2<T>{a, c, Matrix<T>(b.rows(), a.cols()), b});
}

// diag(a, b)
template <Field T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
    return assemble(Block2x2<T>{a, Matrix<T>(a.rows(), b.cols()), Matrix<T>(b.rows(), a.cols()), b});
}

} // namespace ginv
