#pragma once

#include <optional>
#include <string>

#include "twosided.hpp"

// The Stein equation A Y B - Y = C.
//
// With X = Y B it becomes the system {X = Y B, A X - Y = C}, whose sum is the
// shifted two-sided equation (A + I) X - Y (B + I) = C. The converse does not
// hold in general: the shifted equation has solutions violating X = Y B. The
// solver therefore imposes the coupling on the shifted solution family as a
// linear system in the free parameters, and independently asks the oracle.

namespace ginv {

template <Field T>
Matrix<T> stein_residual(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& y) {
    return a * y * b - y - c;
}

template <Field T>
struct SteinCriterion {
    bool holds = false;                   // (A+I)^pi C (B+I)^pi = 0
    EquivalenceCertificate<T> certificate;  // for M1 = [[A+I, C], [0, B+I]], D1 = diag(A+I, B+I)
};

template <Field T>
SteinCriterion<T> check_stein_criterion(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                        const Tolerance& tol = {}) {
    detail::require_triangular_shapes(a, b, c);
    const auto a1 = a + Matrix<T>::identity(a.rows());
    const auto b1 = b + Matrix<T>::identity(b.rows());
    if (!group_inverse(a1, tol)) throw hypothesis_violated("A + I is not group invertible (index > 1)");
    if (!group_inverse(b1, tol)) throw hypothesis_violated("B + I is not group invertible (index > 1)");
    SteinCriterion<T> out;
    out.holds = check_two_sided_solvable(a1, b1, c, tol);
    out.certificate = build_equivalence_certificate(a1, b1, c, tol);
    if (out.holds != out.certificate.certified())
        throw internal_inconsistency("shifted criterion and certificate disagree");
    return out;
}

template <Field T>
struct SteinReport {
    bool criterion_holds = false;
    SteinCriterion<T> criterion;
    std::optional<Matrix<T>> coupled_solution;
    std::optional<Matrix<T>> oracle_solution;
    bool verdicts_agree = false;  // criterion_holds == oracle solvable

    bool solvable() const noexcept { return coupled_solution.has_value() || oracle_solution.has_value(); }
};

/// Searches the shifted family X(Z, Z1), Y(Z) for parameters with
/// X(Z, Z1) = Y(Z) B. The coupling is affine in (vec Z, vec Z1); its linear
/// part is read off column by column from the family evaluator.
template <Field T>
std::optional<Matrix<T>> coupled_stein_search(const Matrix<T>& b, const TwoSidedSolutionFamily<T>& shifted,
                                              const Tolerance& tol = {}) {
    const std::size_t n = shifted.c().rows(), m = shifted.c().cols(), nm = n * m;
    auto unpack = [&](const Matrix<T>& params) {
        return std::pair{oracle::unvec(params, n, m), oracle::unvec(params, n, m, nm)};
    };
    auto coupling = [&](const Matrix<T>& params) {
        const auto [z, z1] = unpack(params);
        const auto xy = shifted.evaluate(z, z1);
        return oracle::vec(Matrix<T>(xy.x - xy.y * b));
    };
    const Matrix<T> origin(2 * nm, 1);
    const auto offset = coupling(origin);
    Matrix<T> linear(nm, 2 * nm);
    for (std::size_t k = 0; k < 2 * nm; ++k) {
        Matrix<T> e(2 * nm, 1);
        e(k, 0) = T(1);
        linear.set_block(0, k, coupling(e) - offset);
    }
    const auto sol = solve_linear(linear, -offset, tol);
    if (!sol.consistent) return std::nullopt;
    const auto [z, z1] = unpack(sol.particular);
    return shifted.evaluate(z, z1).y;
}

/// Runs the criterion, the coupled family search and the vectorized oracle
/// side by side. Any Y returned satisfies A Y B - Y = C; disagreement between
/// the criterion and the oracle is reported, not resolved.
template <Field T>
SteinReport<T> solve_stein(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Tolerance& tol = {}) {
    SteinReport<T> out;
    out.criterion = check_stein_criterion(a, b, c, tol);
    out.criterion_holds = out.criterion.holds;
    const double scale = std::max({a.max_abs(), b.max_abs(), c.max_abs()});

    if (out.criterion_holds) {
        const auto shifted =
            solve_two_sided(Matrix<T>(a + Matrix<T>::identity(a.rows())), Matrix<T>(b + Matrix<T>::identity(b.rows())), c, tol);
        if (!shifted) throw internal_inconsistency("criterion holds but the shifted family is empty");
        out.coupled_solution = coupled_stein_search(b, *shifted, tol);
        if (out.coupled_solution && !is_zero(stein_residual(a, b, c, *out.coupled_solution), tol, scale))
            throw internal_inconsistency("coupled search returned Y with A Y B - Y != C");
    }

    out.oracle_solution = oracle::oracle_stein(a, b, c, tol);
    if (out.oracle_solution && !is_zero(stein_residual(a, b, c, *out.oracle_solution), tol, scale))
        throw internal_inconsistency("oracle returned Y with A Y B - Y != C");
    out.verdicts_agree = out.criterion_holds == out.oracle_solution.has_value();
    return out;
}

} // namespace ginv
