#include "support.hpp"

namespace ginv::test {
namespace {

TEST(Generator, SameSeedSameInstances) {
    InstanceGenerator<Rational> g1(99), g2(99), g3(100);
    const auto a = g1.group_invertible(4, 2);
    EXPECT_EQ(a, g2.group_invertible(4, 2));
    EXPECT_NE(a, g3.group_invertible(4, 2));
    const auto i1 = g1.solvable(EquationKind::two_sided, 3, 2);
    const auto i2 = g2.solvable(EquationKind::two_sided, 3, 2);
    EXPECT_EQ(i1.c, i2.c);
}

TEST(Generator, ModesAgreeForSameSeed) {
    InstanceGenerator<Rational> exact(5);
    InstanceGenerator<double> floating(5);
    EXPECT_EQ(convert<double>(exact.group_invertible(3, 2)), floating.group_invertible(3, 2));
}

TEST(Generator, RankExtremes) {
    const auto full = gen_group_invertible({3, 3, 1});
    EXPECT_EQ(rank(full), 3u);
    EXPECT_EQ(group_inverse(full).a_sharp, *inverse(full));
    const auto zero = gen_group_invertible({3, 0, 1});
    EXPECT_EQ(zero, Q::zero(3, 3));
    EXPECT_EQ(group_inverse(zero).a_pi, Q::identity(3));
    EXPECT_THROW(gen_group_invertible({2, 3, 1}), dimension_error);
}

TEST(Generator, Seed42) {
    const auto a = gen_group_invertible({3, 2, 42});
    EXPECT_EQ(rank(a), 2u);
    expect_group_inverse_axioms(a, group_inverse(a));
}

TEST(Generator, GroupInvertibleOutputsPassAxioms) {
    InstanceGenerator<Rational> gen(81);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = gen.uniform_size(1, 6);
        const auto a = gen.group_invertible(n);
        expect_group_inverse_axioms(a, group_inverse(a));
    }
}

TEST(Generator, SolvableInstancesConfirmedByOracle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto syl = gen_solvable_instance(EquationKind::sylvester, {3, 2, seed});
        EXPECT_EQ(syl.c, Q(syl.a * syl.x - syl.x * syl.b));
        EXPECT_TRUE(oracle::oracle_sylvester(syl.a, syl.b, syl.c));

        const auto two = gen_solvable_instance(EquationKind::two_sided, {3, 2, seed});
        EXPECT_TRUE(check_two_sided_solvable(two.a, two.b, two.c));
        EXPECT_TRUE(oracle::oracle_two_sided(two.a, two.b, two.c));

        const auto st = gen_solvable_instance(EquationKind::stein, {3, 2, seed});
        EXPECT_EQ(st.c, Q(st.a * st.y * st.b - st.y));
        EXPECT_TRUE(oracle::oracle_stein(st.a, st.b, st.c));
        EXPECT_TRUE(group_inverse(Q(st.a + Q::identity(3))));
    }
}

TEST(Generator, KindNames) {
    EXPECT_EQ(kind_name(EquationKind::two_sided), "two-sided");
    EXPECT_EQ(kind_name(EquationKind::stein), "stein");
}

} // namespace
} // namespace ginv::test
