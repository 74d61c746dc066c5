#include "sph/rational.hpp"

#include <gtest/gtest.h>

using namespace sph;

TEST(Rational, CanonicalForm) {
    auto q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(q), "-3/2");
    EXPECT_EQ(to_string(make_rational(8, 4)), "2");
    EXPECT_EQ(to_string(make_rational(0, 7)), "0");
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "5", "-5", "37/2", "-13/2", "1/3"}) EXPECT_EQ(to_string(parse_rational(s)), s);
    EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, ExactArithmeticHasNoRounding) {
    Rational sum = 0;
    for (int i = 0; i < 30; ++i) sum += make_rational(1, 10);
    EXPECT_EQ(sum, 3);
    Rational big = 1;
    for (int i = 0; i < 40; ++i) big *= 1000;
    EXPECT_EQ((big + 1) - big, 1);
}

TEST(Rational, IntegerConversion) {
    EXPECT_TRUE(is_integer(make_rational(4, 2)));
    EXPECT_FALSE(is_integer(make_rational(1, 2)));
    EXPECT_EQ(to_int64(make_rational(-9, 3)), -3);
}

TEST(Rational, VectorOps) {
    RatVector a = {1, 2, 3}, b = {make_rational(1, 2), 0, -1};
    EXPECT_EQ(dot(a, b), make_rational(-5, 2));
    EXPECT_EQ(add(a, b), (RatVector{make_rational(3, 2), 2, 2}));
    EXPECT_EQ(sub(a, b), (RatVector{make_rational(1, 2), 2, 4}));
    EXPECT_EQ(scale(2, b), (RatVector{1, 0, -2}));
    EXPECT_EQ(unit(3, 1), (RatVector{0, 1, 0}));
    EXPECT_EQ(to_string(b), "(1/2, 0, -1)");
}

TEST(Rational, RankAndSolve) {
    RatMatrix m = {{1, 2}, {2, 4}};
    EXPECT_EQ(rank(m), 1u);
    RatVector x;
    EXPECT_FALSE(solve_square(m, {1, 1}, x));
    RatMatrix n = {{2, 1}, {1, 3}};
    ASSERT_TRUE(solve_square(n, {3, 5}, x));
    EXPECT_EQ(x, (RatVector{make_rational(4, 5), make_rational(7, 5)}));
    EXPECT_EQ(mat_vec(n, x), (RatVector{3, 5}));
    EXPECT_EQ(transpose(RatMatrix{{1, 2, 3}}), (RatMatrix{{1}, {2}, {3}}));
}
