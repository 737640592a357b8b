#pragma once

#include <gtest/gtest.h>

#include <ginv/ginv.hpp>

namespace ginv::test {

using Q = Matrix<Rational>;

// Worked example: A and B of index one, C with A^pi C B^pi = 0.
inline Q example_a() { return {{-1, 0, 1, 2}, {-1, 1, 0, -1}, {0, -1, 1, 3}, {1, 1, -2, -5}}; }

inline Q example_b() {
    Q b{{4, -2, -2, 0}, {-2, 4, -2, 0}, {-2, -1, 4, -1}, {-1, -1, -1, 3}};
    return b * rat(1, 4);
}

inline Q example_c() { return {{3, 1, 1, -2}, {0, 0, 0, 0}, {2, 0, 0, 1}, {-6, 1, 1, -2}}; }

inline Q example_a_sharp() { return {{-5, 4, 1, -2}, {-21, 17, 4, -9}, {16, -13, -3, 7}, {-11, 9, 2, -5}}; }

inline Q example_aa_sharp() { return {{-1, 1, 0, -1}, {-5, 4, 1, -2}, {4, -3, -1, 1}, {-3, 2, 1, 0}}; }

inline Q example_b_sharp() {
    Q m{{265, -61, -96, -108}, {-96, 300, -96, -108}, {-115, -137, 246, 6}, {-210, -156, -210, 576}};
    return m * rat(2, 1083);
}

inline Q example_bb_sharp() {
    Q m{{13, -5, -6, -2}, {-6, 14, -6, -2}, {-6, -5, 13, -2}, {-6, -5, -6, 17}};
    return m * rat(1, 19);
}

template <Field T>
void expect_group_inverse_axioms(const Matrix<T>& a, const GroupInverseResult<T>& g, const Tolerance& tol = {}) {
    ASSERT_TRUE(g.index_le_one);
    const auto& x = g.a_sharp;
    EXPECT_TRUE(same(a * x * a, a, tol));
    EXPECT_TRUE(same(x * a * x, x, tol));
    EXPECT_TRUE(same(a * x, x * a, tol));
    EXPECT_TRUE(same(g.a_pi * g.a_pi, g.a_pi, tol));
    EXPECT_TRUE(same(g.a_pi * a, a * g.a_pi, tol));
    EXPECT_TRUE(same(a * x, Matrix<T>::identity(a.rows()) - g.a_pi, tol));
}

} // namespace ginv::test
