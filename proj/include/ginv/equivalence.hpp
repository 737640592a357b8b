#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace ginv {

struct IdentityCheck {
    std::string identity;
    bool holds = false;
};

// Outcome of certificate verification. `failed` names the first violated
// identity in the documented check order, or is empty when all hold.
struct Verification {
    bool ok = false;
    std::string failed;
    std::vector<IdentityCheck> checks;

    explicit operator bool() const noexcept { return ok; }

    void record(std::string identity, bool holds) {
        if (!holds && failed.empty()) failed = identity;
        checks.push_back({std::move(identity), holds});
    }

    void finish() { ok = failed.empty(); }
};

// A ~ B via T: A = T B T=, B = T- A T, with T- and T= inner inverses of T.
template <Field T>
struct PseudoSimilarityWitness {
    Matrix<T> t;
    Matrix<T> t_minus;
    Matrix<T> t_equals;
};

// B = P A Q and A = P- B Q-, with P-, Q- inner inverses of P, Q.
template <Field T>
struct PseudoEquivalenceWitness {
    Matrix<T> p;
    Matrix<T> q;
    Matrix<T> p_minus;
    Matrix<T> q_minus;
};

/// Verifies A ~ B via (T, T-, T=) from scratch. Check order:
///   1. T T- T = T            2. T T= T = T
///   3. A = T B T=            4. B = T- A T
///   5. A = T T- A T T=       6. A = A T T=         7. A = T T- A
///   8. B = T- T B T= T       9. B = T- T B         10. B = B T= T
///   11. A T = T B            12. B T= = T- A
/// 5-12 follow from 1-4; they are recomputed, not assumed.
template <Field T>
Verification verify_pseudo_similar(const Matrix<T>& a, const Matrix<T>& b, const PseudoSimilarityWitness<T>& w,
                                   const Tolerance& tol = {}) {
    const auto& t = w.t;
    const auto& tm = w.t_minus;
    const auto& te = w.t_equals;
    if (!a.is_square() || !b.is_square() || t.rows() != a.rows() || t.cols() != b.rows() ||
        tm.rows() != t.cols() || tm.cols() != t.rows() || te.rows() != t.cols() || te.cols() != t.rows())
        throw dimension_error("pseudo-similarity needs A n x n, B m x m, T n x m, T- and T= m x n; got A " +
                              a.shape() + ", B " + b.shape() + ", T " + t.shape() + ", T- " + tm.shape() +
                              ", T= " + te.shape());
    Verification v;
    v.record("T T- T = T", same(t * tm * t, t, tol));
    v.record("T T= T = T", same(t * te * t, t, tol));
    v.record("A = T B T=", same(a, t * b * te, tol));
    v.record("B = T- A T", same(b, tm * a * t, tol));
    v.record("A = T T- A T T=", same(a, t * tm * a * t * te, tol));
    v.record("A = A T T=", same(a, a * t * te, tol));
    v.record("A = T T- A", same(a, t * tm * a, tol));
    v.record("B = T- T B T= T", same(b, tm * t * b * te * t, tol));
    v.record("B = T- T B", same(b, tm * t * b, tol));
    v.record("B = B T= T", same(b, b * te * t, tol));
    v.record("A T = T B", same(a * t, t * b, tol));
    v.record("B T= = T- A", same(b * te, tm * a, tol));
    v.finish();
    return v;
}

/// Verifies that A is pseudo-equivalent to B via (P, Q, P-, Q-). Check order:
///   1. P P- P = P     2. Q Q- Q = Q
///   3. B = P A Q      4. A = P- B Q-
///   5. P- P A = A     6. A Q Q- = A     7. P P- B = B     8. B Q- Q = B
template <Field T>
Verification verify_pseudo_equivalent(const Matrix<T>& a, const Matrix<T>& b, const PseudoEquivalenceWitness<T>& w,
                                      const Tolerance& tol = {}) {
    const auto& p = w.p;
    const auto& q = w.q;
    const auto& pm = w.p_minus;
    const auto& qm = w.q_minus;
    if (!a.is_square() || !b.is_square() || p.rows() != b.rows() || p.cols() != a.rows() ||
        q.rows() != a.rows() || q.cols() != b.rows() || pm.rows() != p.cols() || pm.cols() != p.rows() ||
        qm.rows() != q.cols() || qm.cols() != q.rows())
        throw dimension_error("pseudo-equivalence needs A n x n, B m x m, P m x n, Q n x m and transposed-shape "
                              "inner inverses; got A " + a.shape() + ", B " + b.shape() + ", P " + p.shape() +
                              ", Q " + q.shape() + ", P- " + pm.shape() + ", Q- " + qm.shape());
    Verification v;
    v.record("P P- P = P", same(p * pm * p, p, tol));
    v.record("Q Q- Q = Q", same(q * qm * q, q, tol));
    v.record("B = P A Q", same(b, p * a * q, tol));
    v.record("A = P- B Q-", same(a, pm * b * qm, tol));
    v.record("P- P A = A", same(pm * p * a, a, tol));
    v.record("A Q Q- = A", same(a * q * qm, a, tol));
    v.record("P P- B = B", same(p * pm * b, b, tol));
    v.record("B Q- Q = B", same(b * qm * q, b, tol));
    v.finish();
    return v;
}

} // namespace ginv
