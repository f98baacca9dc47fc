#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace geuler;
using geuler::testing::q;
using geuler::testing::random_cyclo;
using geuler::testing::random_egf;

namespace {

TruncatedEGF rational_egf(std::initializer_list<Rational> c)
{
    std::vector<CycloRational> v;
    for (const auto& r : c) {
        v.emplace_back(r);
    }
    return TruncatedEGF(std::move(v));
}

}  // namespace

TEST(Egf, Exp)
{
    EXPECT_EQ(egf_exp(Rational(0), 3), rational_egf({1, 0, 0, 0}));
    EXPECT_EQ(egf_exp(Rational(1), 3), rational_egf({1, 1, 1, 1}));
    EXPECT_EQ(egf_exp(Rational(2), 2), rational_egf({1, 2, 4}));
    EXPECT_EQ(egf_exp(Rational(0), 0).order_bound(), 0u);
}

TEST(Egf, Mul)
{
    EXPECT_EQ(egf_mul(egf_exp(Rational(1), 2), egf_exp(Rational(1), 2)), rational_egf({1, 2, 4}));
    const auto f = rational_egf({3, q(1, 2), -7, 2});
    EXPECT_EQ(egf_mul(f, TruncatedEGF::one(3)), f);
    // Truncation follows the smaller operand.
    EXPECT_EQ(egf_mul(f, TruncatedEGF::one(1)).order_bound(), 1u);

    const auto e_plus_one = egf_exp(Rational(1), 4) + TruncatedEGF::one(4);
    const auto two = rational_egf({2, 0, 0, 0, 0});
    EXPECT_EQ(egf_mul(e_plus_one, egf_div(two, e_plus_one)), two);
}

TEST(Egf, DivGivesClassicalEulerNumbers)
{
    const auto two = rational_egf({2, 0, 0, 0, 0});
    const auto den = rational_egf({2, 1, 1, 1, 1});
    EXPECT_EQ(egf_div(two, den), rational_egf({1, q(-1, 2), 0, q(1, 4), 0}));

    const auto f = rational_egf({5, 1, q(2, 3)});
    EXPECT_EQ(egf_div(f, TruncatedEGF::one(2)), f);
    EXPECT_THROW(egf_div(f, rational_egf({0, 1, 1})), std::domain_error);
}

TEST(Egf, ScaleArg)
{
    const auto f = rational_egf({3, 1, 4, 1, 5});
    EXPECT_EQ(egf_scale_arg(f, Rational(1)), f);
    EXPECT_EQ(egf_scale_arg(f, Rational(0)), rational_egf({3, 0, 0, 0, 0}));
    EXPECT_EQ(egf_scale_arg(egf_exp(Rational(1), 6), Rational(3)), egf_exp(Rational(3), 6));
}

TEST(EgfProperties, RingLawsOnRandomSeries)
{
    std::mt19937_64 rng(3);
    for (unsigned long m : {1ul, 3ul, 4ul}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_egf(rng, m, 8);
            const auto g = random_egf(rng, m, 8);
            const auto h = random_egf(rng, m, 8);
            EXPECT_EQ(egf_mul(f, g), egf_mul(g, f));
            EXPECT_EQ(egf_mul(egf_mul(f, g), h), egf_mul(f, egf_mul(g, h)));
            if (!g[0].is_zero()) {
                EXPECT_EQ(egf_div(egf_mul(f, g), g), f);
                EXPECT_EQ(egf_mul(egf_div(TruncatedEGF::one(8), g), g), TruncatedEGF::one(8));
            }
        }
    }
}

TEST(EgfProperties, ExpIsAHomomorphism)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_cyclo(rng, 5, 6);
        const auto b = random_cyclo(rng, 3, 6);
        EXPECT_EQ(egf_mul(egf_exp(a, 8), egf_exp(b, 8)), egf_exp(a + b, 8));
    }
}

TEST(EgfProperties, PolynomialCoefficients)
{
    // e^{x t} over Q[x] times e^{y t} with y rational is e^{(x + y) t}.
    const XPoly x = XPoly::x();
    const auto lhs = egf_mul(egf_exp(x, 6), convert_coeffs<XPoly>(egf_exp(Rational(2), 6)));
    const auto rhs = egf_exp(x + XPoly(Rational(2)), 6);
    EXPECT_EQ(lhs, rhs);
}
