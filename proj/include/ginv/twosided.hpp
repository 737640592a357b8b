#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "equivalence.hpp"
#include "geninv.hpp"
#include "oracle.hpp"

// The two-unknown equation A X - Y B = C with A, B group invertible.
//
// Solvable iff A^pi C B^pi = 0 (equivalently M = [[A, C], [0, B]] is group
// invertible). Then every solution is
//   X = A# C + A# Z B + A^pi Z1
//   Y = -A^pi C B# + Z + A A# Z B B# - Z B B#
// for free Z, Z1 of the shape of C.

namespace ginv {

using oracle::TwoSidedPair;

template <Field T>
Matrix<T> two_sided_residual(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& x,
                             const Matrix<T>& y) {
    return a * x - y * b - c;
}

template <Field T>
bool check_two_sided_solvable(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Tolerance& tol = {}) {
    return block_triangular_group_invertible(a, b, c, tol);
}

template <Field T>
class TwoSidedSolutionFamily {
public:
    TwoSidedSolutionFamily(Matrix<T> a, Matrix<T> b, Matrix<T> c, GroupInverseResult<T> ga, GroupInverseResult<T> gb,
                           const Tolerance& tol)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), ga_(std::move(ga)), gb_(std::move(gb)), tol_(tol) {
        aa_sharp_ = ga_.range_projector();
        bb_sharp_ = gb_.range_projector();
        x0 = ga_.a_sharp * c_;
        y0 = (aa_sharp_ - Matrix<T>::identity(a_.rows())) * c_ * gb_.a_sharp;
        require_solution(x0, y0, "particular solution (X0, Y0)");
    }

    Matrix<T> x0;  // A# C
    Matrix<T> y0;  // (A A# - I) C B#

    // (X, Y) at free parameters (Z, Z1); the residual is checked on every call.
    TwoSidedPair<T> evaluate(const Matrix<T>& z, const Matrix<T>& z1) const {
        if (z.rows() != c_.rows() || z.cols() != c_.cols() || z1.rows() != c_.rows() || z1.cols() != c_.cols())
            throw dimension_error("family parameters must be " + c_.shape() + "; got Z " + z.shape() + ", Z1 " +
                                  z1.shape());
        const auto& as = ga_.a_sharp;
        const auto z_bb = z * bb_sharp_;
        TwoSidedPair<T> out{as * c_ + as * z * b_ + ga_.a_pi * z1,
                            z - ga_.a_pi * c_ * gb_.a_sharp + aa_sharp_ * z_bb - z_bb};
        require_solution(out.x, out.y, "family member");
        return out;
    }

    bool is_solution(const Matrix<T>& x, const Matrix<T>& y) const {
        return is_zero(two_sided_residual(a_, b_, c_, x, y), tol_, scale());
    }

    const Matrix<T>& a() const noexcept { return a_; }
    const Matrix<T>& b() const noexcept { return b_; }
    const Matrix<T>& c() const noexcept { return c_; }
    const GroupInverseResult<T>& group_inverse_a() const noexcept { return ga_; }
    const GroupInverseResult<T>& group_inverse_b() const noexcept { return gb_; }

private:
    double scale() const { return std::max({a_.max_abs(), b_.max_abs(), c_.max_abs()}); }

    void require_solution(const Matrix<T>& x, const Matrix<T>& y, const char* what) const {
        if (x.rows() != c_.rows() || x.cols() != c_.cols() || !is_solution(x, y))
            throw internal_inconsistency(std::string(what) + " does not satisfy A X - Y B = C");
    }

    Matrix<T> a_, b_, c_;
    GroupInverseResult<T> ga_, gb_;
    Matrix<T> aa_sharp_, bb_sharp_;
    Tolerance tol_;
};

/// Solution family of A X - Y B = C, or nullopt when A^pi C B^pi != 0.
template <Field T>
std::optional<TwoSidedSolutionFamily<T>> solve_two_sided(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                                         const Tolerance& tol = {}) {
    detail::require_triangular_shapes(a, b, c);
    auto ga = require_group_inverse(a, "A", tol);
    auto gb = require_group_inverse(b, "B", tol);
    if (!is_zero(spectral_corner(ga, c, gb), tol, c.max_abs())) return std::nullopt;
    return TwoSidedSolutionFamily<T>(a, b, c, std::move(ga), std::move(gb), tol);
}

template <Field T>
struct TwoSidedParameters {
    Matrix<T> z;
    Matrix<T> z1;
};

/// Free parameters reproducing a given solution: Z = Y*, Z1 = X*. Reproduction
/// is checked by evaluating the family.
template <Field T>
TwoSidedParameters<T> parameters_for_solution(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                              const Matrix<T>& x, const Matrix<T>& y, const Tolerance& tol = {}) {
    detail::require_triangular_shapes(a, b, c);
    if (x.rows() != c.rows() || x.cols() != c.cols() || y.rows() != c.rows() || y.cols() != c.cols())
        throw dimension_error("X and Y must be " + c.shape());
    const auto r = two_sided_residual(a, b, c, x, y);
    if (!is_zero(r, tol, std::max({a.max_abs(), b.max_abs(), c.max_abs()})))
        throw solution_rejected("(X, Y) is not a solution of A X - Y B = C; max |residual| = " +
                                std::to_string(r.max_abs()));
    auto family = solve_two_sided(a, b, c, tol);
    if (!family) throw internal_inconsistency("equation has a solution but A^pi C B^pi != 0");
    TwoSidedParameters<T> p{y, x};
    const auto back = family->evaluate(p.z, p.z1);
    if (!same(back.x, x, tol) || !same(back.y, y, tol))
        throw internal_inconsistency("family evaluated at (Z, Z1) = (Y*, X*) does not reproduce (X*, Y*)");
    return p;
}

template <Field T>
struct EquivalenceCertificate {
    PseudoEquivalenceWitness<T> witness;
    Matrix<T> u;                 // D Q P D D# + I - D D#
    bool u_invertible = false;
    Verification verification;   // D pseudo-equivalent to M via the witness
    std::vector<IdentityCheck> checks;

    // The instance is certified solvable.
    bool certified() const noexcept { return verification.ok && u_invertible; }
};

/// Builds the candidate witness
///   P  = [[A A#, A^pi C B#], [0, B B#]]     Q  = [[A A#, A# C], [0, B B#]]
///   P- = diag(A A#, B B#)                   Q- = [[A A#, -A# C B B#], [0, B B#]]
/// and checks from scratch that M = P D Q, D = P- M Q- and that U is
/// invertible. The candidate certifies exactly the solvable instances.
template <Field T>
EquivalenceCertificate<T> build_equivalence_certificate(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                                        const Tolerance& tol = {}) {
    detail::require_triangular_shapes(a, b, c);
    const auto ga = require_group_inverse(a, "A", tol);
    const auto gb = require_group_inverse(b, "B", tol);
    const auto aa = ga.range_projector();
    const auto bb = gb.range_projector();
    const auto& as = ga.a_sharp;
    const auto& bs = gb.a_sharp;

    EquivalenceCertificate<T> cert;
    cert.witness.p = upper_triangular(aa, ga.a_pi * c * bs, bb);
    cert.witness.q = upper_triangular(aa, as * c, bb);
    cert.witness.p_minus = block_diagonal(aa, bb);
    cert.witness.q_minus = upper_triangular(aa, -(as * c * bb), bb);

    const auto m = upper_triangular(a, c, b);
    const auto d = block_diagonal(a, b);
    cert.verification = verify_pseudo_equivalent(d, m, cert.witness, tol);

    const auto gd = group_inverse(d, tol);
    if (!gd) throw internal_inconsistency("diag(A, B) lost group invertibility");
    const auto dd = gd.range_projector();
    cert.u = d * cert.witness.q * cert.witness.p * dd + gd.a_pi;
    const auto u_blocks = upper_triangular(a + ga.a_pi, aa * c * bb, b + gb.a_pi);
    const bool u_formula = same(cert.u, u_blocks, tol);
    cert.checks.push_back({"D Q P D D# + I - D D# = [[A + A^pi, A A# C B B#], [0, B + B^pi]]", u_formula});
    if (!u_formula) throw internal_inconsistency("U block formula disagrees with its definition");
    cert.u_invertible = inverse(cert.u, tol).has_value();
    cert.checks.push_back({"U invertible", cert.u_invertible});
    return cert;
}

} // namespace ginv
