#include <gtest/gtest.h>

#include "kfano/linalg.hpp"

using namespace kfano;

TEST(Hermite, ReducesAbovePivots) {
    IntegerMatrix a{{2, 4}, {6, 8}};
    auto h = hermite_normal_form(a);
    EXPECT_EQ(h.H, (IntegerMatrix{{2, 0}, {0, 4}}));
    EXPECT_EQ(h.U * a, h.H);
    EXPECT_TRUE(is_unimodular(h.U));
    EXPECT_EQ(h.rank, 2u);
}

TEST(Hermite, RankDeficient) {
    IntegerMatrix a{{1, 2, 3}, {2, 4, 6}};
    auto h = hermite_normal_form(a);
    EXPECT_EQ(h.rank, 1u);
    EXPECT_EQ(h.H.row(1), ivec({0, 0, 0}));
    EXPECT_EQ(h.U * a, h.H);
}

TEST(Smith, Diagonal) {
    auto s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(s.divisors, (std::vector<Int>{1, 6}));
    IntegerMatrix m{{2, 0}, {0, 3}};
    EXPECT_EQ(s.U * m * s.V, s.S);
}

TEST(Smith, QuotientSingularityCone) {
    // rays of a 1/3(1,1,2) cone
    IntegerMatrix a{{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}};
    auto s = smith_normal_form(a);
    EXPECT_EQ(s.divisors, (std::vector<Int>{1, 1, 3}));
    EXPECT_EQ(abs(determinant(a)), 3);
}

TEST(Kernel, SingleRow) {
    auto k = integer_kernel(IntegerMatrix{{1, -1}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(k[0] == ivec({1, 1}) || k[0] == ivec({-1, -1}));
}

TEST(Kernel, SaturatedBasis) {
    IntegerMatrix a{{2, 4, 6}};
    auto k = integer_kernel(a);
    ASSERT_EQ(k.size(), 2u);
    for (const auto& v : k) EXPECT_TRUE(is_zero(a.apply(v)));
    // the kernel lattice is saturated: its 2x2 minors are coprime
    Int g = 0;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) g = gcd(g, k[0][i] * k[1][j] - k[0][j] * k[1][i]);
    EXPECT_EQ(g, 1);
}

TEST(Kernel, FullRankIsEmpty) { EXPECT_TRUE(integer_kernel(IntegerMatrix::identity(3)).empty()); }

TEST(Solve, IntegerAndRational) {
    IntegerMatrix a{{2, 0}, {0, 2}};
    EXPECT_FALSE(integer_solve(a, ivec({1, 0})).has_value());
    auto x = solve(a, ivec({1, 0}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Rat(1, 2));
    EXPECT_EQ(*integer_solve(a, ivec({4, 2})), ivec({2, 1}));
}

TEST(Determinant, Exact) {
    EXPECT_EQ(determinant(IntegerMatrix{{1, 2}, {3, 4}}), -2);
    EXPECT_EQ(determinant(IntegerMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), 1);
    // large entries stay exact
    IntegerMatrix big(2, 2);
    big(0, 0) = Int("100000000000000000000");
    big(1, 1) = Int("100000000000000000000");
    EXPECT_EQ(determinant(big), Int("10000000000000000000000000000000000000000"));
}

TEST(Rank, RationalAndInteger) {
    EXPECT_EQ(rank(std::vector<IVec>{ivec({1, 2}), ivec({2, 4})}), 1u);
    EXPECT_EQ(rank(IntegerMatrix::identity(4)), 4u);
}

TEST(Arith, FloorCeilAndPrimitive) {
    EXPECT_EQ(floor_of(Rat(-1, 2)), -1);
    EXPECT_EQ(ceil_of(Rat(-1, 2)), 0);
    EXPECT_EQ(primitive(ivec({4, -6, 2})), ivec({2, -3, 1}));
    EXPECT_EQ(binomial(6, 3), 20);
}
