#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace ginv {

// Dense row-major matrix over an exact (Rational) or floating (double) field.
// Zero-sized dimensions are valid; a product over an empty inner dimension is
// the zero matrix of the outer shape.
template <Field T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw dimension_error("matrix data length " + std::to_string(data_.size()) + " does not match " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_error("ragged initializer list");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(std::initializer_list<T> d) {
        Matrix m(d.size(), d.size());
        std::size_t i = 0;
        for (const auto& v : d) { m(i, i) = v; ++i; }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> data() const noexcept { return data_; }
    std::span<T> data() noexcept { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw dimension_error("block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix columns(std::span<const std::size_t> idx) const {
        Matrix out(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
        return out;
    }

    // Largest absolute entry, as a double; 0 for an empty matrix.
    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, scalar_traits<T>::magnitude(v));
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator-(Matrix a) {
        for (auto& v : a.data_) v = -v;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_error("product of " + a.shape() + " and " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error(std::string("operator") + op + " on " + shape() + " and " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Entrywise zero test: exact for Rational, relative to `scale` for Float.
template <Field T>
bool is_zero(const Matrix<T>& m, const Tolerance& tol = {}, double scale = 1.0) {
    for (const auto& v : m.data())
        if (!scalar_traits<T>::is_zero(v, tol, scale)) return false;
    return true;
}

// a == b, exactly in Rational mode and up to tol * max(1, |a|, |b|) in Float mode.
template <Field T>
bool same(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if constexpr (scalar_traits<T>::exact) {
        return a == b;
    } else {
        return is_zero(a - b, tol, std::max(a.max_abs(), b.max_abs()));
    }
}

// Kronecker product.
template <Field T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

template <Field T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

// Entrywise conversion between modes. Rational -> double rounds; double ->
// Rational is exact (every finite double is a dyadic rational).
template <Field To, Field From>
Matrix<To> convert(const Matrix<From>& m) {
    if constexpr (std::is_same_v<To, From>) {
        return m;
    } else {
        std::vector<To> out;
        out.reserve(m.size());
        for (const auto& v : m.data()) {
            if constexpr (std::is_same_v<To, double>) {
                out.push_back(v.get_d());
            } else {
                out.push_back(Rational(v));
            }
        }
        return Matrix<To>(m.rows(), m.cols(), std::move(out));
    }
}

} // namespace ginv
