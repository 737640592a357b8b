#include "support.hpp"

namespace ginv::test {
namespace {

TEST(InnerInverse, Examples) {
    EXPECT_EQ(inner_inverse(Q::identity(2)), Q::identity(2));
    EXPECT_EQ(inner_inverse(Q::zero(2, 3)), Q::zero(3, 2));
    const Q a{{1, 0}, {0, 0}};
    const auto g = inner_inverse(a);
    EXPECT_EQ(a * g * a, a);
}

TEST(InnerInverse, DefiningIdentityOnRandomMatrices) {
    InstanceGenerator<Rational> gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = gen.uniform_size(1, 5), c = gen.uniform_size(1, 5);
        const auto a = gen.group_invertible(std::max(r, c)).block(0, 0, r, c);
        const auto g = inner_inverse(a);
        EXPECT_EQ(g.rows(), c);
        EXPECT_EQ(a * g * a, a);
        EXPECT_EQ(inner_inverse(a), g);
    }
}

TEST(InnerInverseFamily, Examples) {
    const Q p{{1, 0}, {0, 0}};
    EXPECT_EQ(inner_inverse_family(p, p, Q::zero(2, 2)), p);
    const auto g = inner_inverse_family(p, p, Q{{0, 1}, {0, 0}});
    EXPECT_EQ(g, (Q{{1, 1}, {0, 0}}));
    EXPECT_EQ(p * g * p, p);
}

TEST(InnerInverseFamily, RejectsBadInputs) {
    const Q p{{1, 0}, {0, 0}};
    try {
        inner_inverse_family(p, Q::zero(2, 2), Q::zero(2, 2));
        FAIL() << "expected certificate_invalid";
    } catch (const certificate_invalid& e) {
        EXPECT_EQ(e.identity(), "P P- P = P");
    }
    EXPECT_THROW(inner_inverse_family(p, p, Q::zero(3, 2)), dimension_error);
    EXPECT_THROW(inner_inverse_family(p, Q::zero(3, 2), Q::zero(3, 2)), dimension_error);
}

TEST(InnerInverseFamily, MembersAreInnerInverses) {
    InstanceGenerator<Rational> gen(22);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = gen.uniform_size(1, 4), m = gen.uniform_size(1, 4);
        const auto p = gen.group_invertible(std::max(n, m)).block(0, 0, n, m);
        const auto g = inner_inverse_family(p, inner_inverse(p), gen.integer_matrix(m, n));
        EXPECT_EQ(p * g * p, p);
    }
}

TEST(GroupInverse, WorkedExample) {
    const auto ga = group_inverse(example_a());
    ASSERT_TRUE(ga);
    EXPECT_EQ(ga.a_sharp, example_a_sharp());
    EXPECT_EQ(ga.range_projector(), example_aa_sharp());
    expect_group_inverse_axioms(example_a(), ga);

    const auto gb = group_inverse(example_b());
    ASSERT_TRUE(gb);
    EXPECT_EQ(gb.a_sharp, example_b_sharp());
    EXPECT_EQ(gb.range_projector(), example_bb_sharp());
    expect_group_inverse_axioms(example_b(), gb);

    EXPECT_EQ(rank(example_a()), 2u);
    EXPECT_EQ(rank(Q(example_a() * example_a())), 2u);
    EXPECT_EQ(rank(example_b()), 3u);
}

TEST(GroupInverse, DiagonalAndNilpotent) {
    const auto g = group_inverse(Q::diagonal({2, 0}));
    ASSERT_TRUE(g);
    EXPECT_EQ(g.a_sharp, Q::diagonal({rat(1, 2), 0}));
    EXPECT_EQ(g.a_pi, Q::diagonal({0, 1}));

    const auto n = group_inverse(Q{{0, 1}, {0, 0}});
    EXPECT_FALSE(n);
    EXPECT_FALSE(n.index_le_one);
    EXPECT_TRUE(n.a_sharp.empty());
    EXPECT_THROW(group_inverse(Q(2, 3)), dimension_error);
    EXPECT_THROW(require_group_inverse(Q{{0, 1}, {0, 0}}, "A"), hypothesis_violated);
}

TEST(GroupInverse, InvertibleAndZero) {
    const Q a{{2, 1}, {1, 1}};
    EXPECT_EQ(group_inverse(a).a_sharp, *inverse(a));
    const auto z = group_inverse(Q::zero(3, 3));
    ASSERT_TRUE(z);
    EXPECT_EQ(z.a_sharp, Q::zero(3, 3));
    EXPECT_EQ(z.a_pi, Q::identity(3));
}

TEST(GroupInverse, IndependentOfFactorization) {
    InstanceGenerator<Rational> gen(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = gen.uniform_size(1, 5);
        const auto a = gen.group_invertible(n);
        const auto rf = rank_factorize(a);
        const auto r = gen.invertible(rf.rank);
        const auto r_inv = *inverse(r);
        const auto other = group_inverse_from_factorization(Q(rf.f * r), Q(r_inv * rf.g));
        ASSERT_TRUE(other);
        EXPECT_EQ(other.a_sharp, group_inverse(a).a_sharp);
    }
}

TEST(GroupInverse, FloatModeMatchesRational) {
    const auto g = group_inverse(convert<double>(example_b()), Tolerance{1e-9});
    ASSERT_TRUE(g);
    EXPECT_TRUE(same(g.a_sharp, convert<double>(example_b_sharp()), Tolerance{1e-9}));
    expect_group_inverse_axioms(convert<double>(example_b()), g, Tolerance{1e-9});
    EXPECT_FALSE(group_inverse(Matrix<double>{{0.0, 1.0}, {0.0, 0.0}}));
}

TEST(BlockCriterion, Examples) {
    EXPECT_TRUE(block_triangular_group_invertible(example_a(), example_b(), example_c()));
    EXPECT_EQ(spectral_corner(group_inverse(example_a()), example_c(), group_inverse(example_b())), Q::zero(4, 4));
    EXPECT_FALSE(block_triangular_group_invertible(Q{{0}}, Q{{0}}, Q{{1}}));
    EXPECT_TRUE(block_triangular_group_invertible(example_a(), example_b(), Q::zero(4, 4)));
    EXPECT_THROW(block_triangular_group_invertible(Q{{0, 1}, {0, 0}}, Q{{1}}, Q::zero(2, 1)), hypothesis_violated);
    EXPECT_THROW(block_triangular_group_invertible(Q{{1}}, Q{{1}}, Q::zero(2, 1)), dimension_error);
}

TEST(BlockCriterion, AgreesWithDirectGroupInverse) {
    InstanceGenerator<Rational> gen(24);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = gen.uniform_size(1, 4), m = gen.uniform_size(1, 4);
        const auto a = gen.group_invertible(n), b = gen.group_invertible(m);
        const auto c = gen.integer_matrix(n, m);
        const bool criterion = block_triangular_group_invertible(a, b, c);
        const auto gm = group_inverse(upper_triangular(a, c, b));
        EXPECT_EQ(criterion, gm.index_le_one);
        (criterion ? yes : no)++;
        if (criterion) {
            const auto parts = block_group_inverse(a, b, c);
            ASSERT_TRUE(parts.exists);
            EXPECT_EQ(parts.m_sharp, gm.a_sharp);
        }
    }
    EXPECT_GT(yes, 0);
    EXPECT_GT(no, 0);
}

TEST(BlockGroupInverse, Examples) {
    const auto zero = block_group_inverse(example_a(), example_b(), Q::zero(4, 4));
    ASSERT_TRUE(zero.exists);
    EXPECT_EQ(zero.s, Q::zero(4, 4));
    EXPECT_EQ(zero.m_sharp, block_diagonal(example_a_sharp(), example_b_sharp()));

    const auto small = block_group_inverse(Q{{2}}, Q{{0}}, Q{{1}});
    ASSERT_TRUE(small.exists);
    EXPECT_EQ(small.s, (Q{{rat(1, 4)}}));
    EXPECT_EQ(small.m_sharp, (Q{{rat(1, 2), rat(1, 4)}, {0, 0}}));
    const Q m{{2, 1}, {0, 0}};
    const auto& x = small.m_sharp;
    EXPECT_EQ(m * x * m, m);
    EXPECT_EQ(x * m * x, x);
    EXPECT_EQ(m * x, x * m);

    const auto big = block_group_inverse(example_a(), example_b(), example_c());
    ASSERT_TRUE(big.exists);
    const auto mm = upper_triangular(example_a(), example_c(), example_b());
    expect_group_inverse_axioms(mm, group_inverse(mm));
    EXPECT_EQ(big.m_sharp, group_inverse(mm).a_sharp);

    EXPECT_FALSE(block_group_inverse(Q{{0}}, Q{{0}}, Q{{1}}).exists);
}

} // namespace
} // namespace ginv::test
