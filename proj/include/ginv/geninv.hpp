#pragma once

#include <string>

#include "block.hpp"
#include "elimination.hpp"

namespace ginv {

/// Group inverse A# of a square A together with the spectral idempotent
/// A^pi = I - A A#. When A has index greater than one the group inverse does
/// not exist; `index_le_one` is false and both matrices are empty.
template <Field T>
struct GroupInverseResult {
    Matrix<T> a_sharp;
    Matrix<T> a_pi;
    bool index_le_one = false;

    explicit operator bool() const noexcept { return index_le_one; }

    // A A# (= A# A), the projection onto R(A) along N(A).
    Matrix<T> range_projector() const { return Matrix<T>::identity(a_pi.rows()) - a_pi; }
};

/// Inner inverse G = G_r * F_l built from the canonical rank factorization
/// A = F G, with F_l = (F'F)^-1 F' and G_r = G'(GG')^-1. Satisfies A G A = A.
template <Field T>
Matrix<T> inner_inverse(const Matrix<T>& a, const Tolerance& tol = {}) {
    const auto rf = rank_factorize(a, tol);
    const auto ft = rf.f.transpose();
    const auto gt = rf.g.transpose();
    const auto ftf_inv = inverse(ft * rf.f, tol);
    const auto ggt_inv = inverse(rf.g * gt, tol);
    if (!ftf_inv || !ggt_inv) throw internal_inconsistency("rank factorization factors are not of full rank");
    return gt * *ggt_inv * *ftf_inv * ft;
}

/// Every inner inverse of P has the form P- + U - P- P U P P- for some U.
template <Field T>
Matrix<T> inner_inverse_family(const Matrix<T>& p, const Matrix<T>& p_minus, const Matrix<T>& u,
                               const Tolerance& tol = {}) {
    if (p_minus.rows() != p.cols() || p_minus.cols() != p.rows())
        throw dimension_error("inner inverse of " + p.shape() + " must be " + std::to_string(p.cols()) + "x" +
                              std::to_string(p.rows()) + ", got " + p_minus.shape());
    if (u.rows() != p_minus.rows() || u.cols() != p_minus.cols())
        throw dimension_error("family parameter must match P- shape " + p_minus.shape() + ", got " + u.shape());
    if (!same(p * p_minus * p, p, tol))
        throw certificate_invalid("supplied matrix is not an inner inverse of P", "P P- P = P");
    return p_minus + u - p_minus * p * u * p * p_minus;
}

/// A# = F (G F)^-2 G from any full-rank factorization A = F G. G F is
/// invertible exactly when A has index at most one.
template <Field T>
GroupInverseResult<T> group_inverse_from_factorization(const Matrix<T>& f, const Matrix<T>& g,
                                                       const Tolerance& tol = {}) {
    if (f.cols() != g.rows() || f.rows() != g.cols())
        throw dimension_error("factorization " + f.shape() + " * " + g.shape() + " is not square");
    const std::size_t n = f.rows();
    const auto core = inverse(g * f, tol);
    if (!core) return {};
    GroupInverseResult<T> out;
    out.a_sharp = f * (*core * *core) * g;
    // A A# = F (GF)^-1 G
    out.a_pi = Matrix<T>::identity(n) - f * *core * g;
    out.index_le_one = true;
    return out;
}

template <Field T>
GroupInverseResult<T> group_inverse(const Matrix<T>& a, const Tolerance& tol = {}) {
    if (!a.is_square()) throw dimension_error("group inverse of non-square " + a.shape());
    const auto rf = rank_factorize(a, tol);
    return group_inverse_from_factorization(rf.f, rf.g, tol);
}

// Group inverse that a construction requires to exist.
template <Field T>
GroupInverseResult<T> require_group_inverse(const Matrix<T>& a, const std::string& name,
                                            const Tolerance& tol = {}) {
    auto g = group_inverse(a, tol);
    if (!g) throw hypothesis_violated(name + " is not group invertible (index > 1)");
    return g;
}

namespace detail {

template <Field T>
void require_triangular_shapes(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    if (!a.is_square() || !b.is_square() || c.rows() != a.rows() || c.cols() != b.rows())
        throw dimension_error("need A n x n, B m x m, C n x m; got A " + a.shape() + ", B " + b.shape() +
                              ", C " + c.shape());
}

} // namespace detail

// A^pi C B^pi from precomputed group inverses.
template <Field T>
Matrix<T> spectral_corner(const GroupInverseResult<T>& ga, const Matrix<T>& c, const GroupInverseResult<T>& gb) {
    return ga.a_pi * c * gb.a_pi;
}

/// M = [[A, C], [0, B]] with A, B group invertible is itself group invertible
/// iff A^pi C B^pi = 0.
template <Field T>
bool block_triangular_group_invertible(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                       const Tolerance& tol = {}) {
    detail::require_triangular_shapes(a, b, c);
    const auto ga = require_group_inverse(a, "A", tol);
    const auto gb = require_group_inverse(b, "B", tol);
    return is_zero(spectral_corner(ga, c, gb), tol, c.max_abs());
}

template <Field T>
struct BlockGroupInverseParts {
    bool exists = false;
    Matrix<T> s;        // top-right block of M#
    Matrix<T> m_sharp;  // [[A#, s], [0, B#]]
};

/// M# = [[A#, S], [0, B#]] where
///   S = (A#)^2 C B^pi + A^pi C (B#)^2 - A# C B#.
template <Field T>
BlockGroupInverseParts<T> block_group_inverse(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                              const Tolerance& tol = {}) {
    detail::require_triangular_shapes(a, b, c);
    const auto ga = require_group_inverse(a, "A", tol);
    const auto gb = require_group_inverse(b, "B", tol);
    if (!is_zero(spectral_corner(ga, c, gb), tol, c.max_abs())) return {};
    const auto& as = ga.a_sharp;
    const auto& bs = gb.a_sharp;
    BlockGroupInverseParts<T> out;
    out.exists = true;
    out.s = as * as * c * gb.a_pi + ga.a_pi * c * bs * bs - as * c * bs;
    out.m_sharp = upper_triangular(as, out.s, bs);
    return out;
}

} // namespace ginv
