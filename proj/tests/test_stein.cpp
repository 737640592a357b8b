#include "support.hpp"

namespace ginv::test {
namespace {

TEST(SteinCriterion, Examples) {
    EXPECT_TRUE(check_stein_criterion(Q{{2}}, Q{{1}}, Q{{1}}).holds);
    EXPECT_TRUE(check_stein_criterion(Q{{0}}, Q{{5}}, Q{{7}}).holds);
    EXPECT_TRUE(check_stein_criterion(Q{{1}}, Q{{1}}, Q{{1}}).holds);
    // A + I = [[0, 1], [0, 0]] has index two
    EXPECT_THROW(check_stein_criterion(Q{{-1, 1}, {0, -1}}, Q{{1}}, Q{{1}, {1}}), hypothesis_violated);
    EXPECT_THROW(check_stein_criterion(Q{{1}}, Q{{-1, 1}, {0, -1}}, Q{{1, 1}}), hypothesis_violated);
}

TEST(SolveStein, ZeroA) {
    const Q c{{3, -2}};
    const auto r = solve_stein(Q{{0}}, Q{{1, 2}, {3, 4}}, c);
    EXPECT_TRUE(r.criterion_holds);
    ASSERT_TRUE(r.coupled_solution);
    EXPECT_EQ(*r.coupled_solution, Q(-c));
    ASSERT_TRUE(r.oracle_solution);
    EXPECT_EQ(*r.oracle_solution, Q(-c));
    EXPECT_TRUE(r.verdicts_agree);
}

TEST(SolveStein, ScalarSolvable) {
    const auto r = solve_stein(Q{{2}}, Q{{1}}, Q{{1}});
    EXPECT_TRUE(r.criterion_holds);
    ASSERT_TRUE(r.coupled_solution);
    EXPECT_EQ(*r.coupled_solution, (Q{{1}}));
    EXPECT_TRUE(r.verdicts_agree);
    EXPECT_TRUE(r.solvable());
}

TEST(SolveStein, DivergenceCase) {
    const auto r = solve_stein(Q{{1}}, Q{{1}}, Q{{1}});
    EXPECT_TRUE(r.criterion_holds);
    EXPECT_TRUE(r.criterion.certificate.certified());
    EXPECT_FALSE(r.coupled_solution);
    EXPECT_FALSE(r.oracle_solution);
    EXPECT_FALSE(r.verdicts_agree);
    EXPECT_FALSE(r.solvable());
}

TEST(SolveStein, GeneratedSolvableInstances) {
    InstanceGenerator<Rational> gen(61);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = gen.solvable(EquationKind::stein, gen.uniform_size(1, 3), gen.uniform_size(1, 3));
        const auto r = solve_stein(inst.a, inst.b, inst.c);
        EXPECT_TRUE(r.criterion_holds);
        ASSERT_TRUE(r.coupled_solution);
        ASSERT_TRUE(r.oracle_solution);
        EXPECT_TRUE(is_zero(stein_residual(inst.a, inst.b, inst.c, *r.coupled_solution)));
        EXPECT_TRUE(is_zero(stein_residual(inst.a, inst.b, inst.c, *r.oracle_solution)));
    }
}

TEST(SolveStein, CoupledSearchIsSoundAndShiftedFamilyExists) {
    InstanceGenerator<Rational> gen(62);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = gen.uniform_size(1, 3), m = gen.uniform_size(1, 3);
        const auto a = Q(gen.group_invertible(n) - Q::identity(n));
        const auto b = Q(gen.group_invertible(m) - Q::identity(m));
        const auto c = gen.integer_matrix(n, m);
        const auto r = solve_stein(a, b, c);
        if (r.coupled_solution) EXPECT_TRUE(r.oracle_solution);
        if (r.criterion_holds) {
            EXPECT_TRUE(solve_two_sided(Q(a + Q::identity(n)), Q(b + Q::identity(m)), c));
        }
    }
}

} // namespace
} // namespace ginv::test
