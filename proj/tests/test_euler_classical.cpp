#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace geuler;
using geuler::testing::q;

TEST(EulerNumbers, KnownValues)
{
    EXPECT_EQ(euler_numbers(0), (std::vector<Rational>{1}));
    // Frozen from an independent series expansion of 2/(e^t + 1).
    const std::vector<Rational> expect{1,         q(-1, 2), 0, q(1, 4),       0, q(-1, 2),    0, q(17, 8), 0,
                                       q(-31, 2), 0,        q(691, 4), 0, q(-5461, 2), 0, q(929569, 16), 0};
    EXPECT_EQ(euler_numbers(16), expect);
}

TEST(EulerNumbers, EvenIndicesVanishOddAlternate)
{
    const auto e = euler_numbers(30);
    for (std::size_t n = 2; n <= 30; n += 2) {
        EXPECT_TRUE(e[n].is_zero()) << n;
    }
    for (std::size_t n = 1; n + 2 <= 30; n += 2) {
        EXPECT_LT(e[n].sign() * e[n + 2].sign(), 0) << n;
    }
}

TEST(EulerNumbers, AgreeWithSeriesDivision)
{
    const std::size_t L = 16;
    std::vector<CycloRational> two(L + 1);
    two[0] = 2;
    const auto oracle = egf_div(TruncatedEGF(two), egf_exp(Rational(1), L) + TruncatedEGF::one(L));
    const auto e = euler_numbers(L);
    for (std::size_t n = 0; n <= L; ++n) {
        EXPECT_EQ(oracle[n], CycloRational(e[n])) << n;
    }
}

TEST(EulerPolynomial, SmallDegrees)
{
    EXPECT_EQ(euler_polynomial_rational(0), RationalPoly({1}));
    EXPECT_EQ(euler_polynomial_rational(1), RationalPoly({q(-1, 2), 1}));
    EXPECT_EQ(euler_polynomial_rational(2), RationalPoly({0, -1, 1}));
    EXPECT_EQ(euler_polynomial(2), XPoly({0, -1, 1}));
}

TEST(EulerPolynomial, Evaluation)
{
    const auto e = euler_numbers(12);
    for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(euler_poly_eval(n, 0), e[n]);
    }
    EXPECT_EQ(euler_poly_eval(1, q(1, 2)), Rational(0));
    EXPECT_EQ(euler_poly_eval(2, q(1, 3)), q(-2, 9));
}

TEST(EulerPolynomial, DifferenceEquation)
{
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto p = euler_polynomial_rational(n);
        const auto lhs = poly_compose_affine(p, Rational(1), Rational(1)) + p;
        EXPECT_EQ(lhs, RationalPoly::monomial(Rational(2), n)) << n;
        EXPECT_EQ(p.degree(), static_cast<long>(n));
        EXPECT_EQ(p.leading(), Rational(1));
    }
}
