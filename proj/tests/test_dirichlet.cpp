#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "test_support.hpp"

using namespace geuler;

namespace {

const std::vector<unsigned long> kOddModuli{1, 3, 5, 7, 9, 11, 13, 15};

// Independent oracle: the set generated by the listed generators.
std::set<unsigned long> generated_units(const UnitGroup& g)
{
    std::set<unsigned long> seen{1 % g.modulus};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<unsigned long> next = seen;
        for (auto s : seen) {
            for (auto gen : g.generators) {
                next.insert(s * gen % g.modulus);
            }
        }
        grew = next.size() != seen.size();
        seen = std::move(next);
    }
    return seen;
}

}  // namespace

TEST(UnitGroup, Structure)
{
    const auto g1 = unit_group_structure(1);
    EXPECT_TRUE(g1.generators.empty());
    EXPECT_EQ(g1.size(), 1u);

    const auto g9 = unit_group_structure(9);
    ASSERT_EQ(g9.generators.size(), 1u);
    EXPECT_EQ(g9.orders[0], 6u);
    EXPECT_EQ(g9.generators[0], 2u);
    EXPECT_EQ(detail::multiplicative_order(2, 9), 6u);

    const auto g15 = unit_group_structure(15);
    ASSERT_EQ(g15.generators.size(), 2u);
    std::multiset<unsigned long> orders(g15.orders.begin(), g15.orders.end());
    EXPECT_EQ(orders, (std::multiset<unsigned long>{2, 4}));
    EXPECT_EQ(generated_units(g15).size(), 8u);

    EXPECT_THROW(unit_group_structure(4), std::invalid_argument);
    EXPECT_THROW(unit_group_structure(0), std::invalid_argument);
}

TEST(UnitGroup, GeneratesAllUnits)
{
    for (unsigned long d : {1ul, 3ul, 5ul, 9ul, 15ul, 21ul, 25ul, 27ul, 45ul, 105ul}) {
        const auto g = unit_group_structure(d);
        EXPECT_EQ(g.size(), euler_phi(d)) << d;
        std::set<unsigned long> units;
        for (unsigned long a = 0; a < d; ++a) {
            if (std::gcd(a, d) == 1) {
                units.insert(a);
            }
        }
        EXPECT_EQ(generated_units(g), units) << d;
    }
}

TEST(Characters, SmallModuli)
{
    const auto c1 = enumerate_characters(1);
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(chi_eval(c1[0], 0), CycloRational(1));
    EXPECT_EQ(chi_eval(c1[0], 7), CycloRational(1));

    const auto c3 = enumerate_characters(3);
    ASSERT_EQ(c3.size(), 2u);
    EXPECT_EQ(c3[1].values(), (std::vector<CycloRational>{0, 1, -1}));
    EXPECT_EQ(chi_eval(c3[1], 5), CycloRational(-1));

    const auto c5 = enumerate_characters(5);
    std::multiset<unsigned long> orders;
    for (const auto& chi : c5) {
        orders.insert(chi.order());
    }
    EXPECT_EQ(orders, (std::multiset<unsigned long>{1, 2, 4, 4}));
    // 2 is the canonical generator mod 5; the first order-4 character sends it to zeta_4.
    EXPECT_EQ(c5[1].order(), 4u);
    EXPECT_EQ(chi_eval(c5[1], 2), CycloRational::zeta(4));

    for (const auto& chi : enumerate_characters(15)) {
        EXPECT_TRUE(chi_eval(chi, 10).is_zero());
    }
    EXPECT_THROW(enumerate_characters(8), std::invalid_argument);
    EXPECT_THROW(character(5, 4), std::out_of_range);
}

TEST(Characters, CountDistinctMultiplicative)
{
    for (unsigned long d : kOddModuli) {
        const auto chars = enumerate_characters(d);
        ASSERT_EQ(chars.size(), euler_phi(d));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            EXPECT_EQ(chars[i].index(), i);
            for (std::size_t j = i + 1; j < chars.size(); ++j) {
                EXPECT_FALSE(chars[i].values() == chars[j].values());
            }
            const auto& chi = chars[i];
            EXPECT_EQ(chi(1), CycloRational(1));
            for (unsigned long a = 0; a < d; ++a) {
                EXPECT_EQ(chi(a).is_zero(), d > 1 && std::gcd(a, d) != 1);
                for (unsigned long b = 0; b < d; ++b) {
                    EXPECT_EQ(chi(a * b % d), chi(a) * chi(b));
                }
                if (std::gcd(a, d) == 1) {
                    EXPECT_EQ(chi(a).pow(chi.order()), CycloRational(1));
                }
            }
        }
    }
}

TEST(Characters, Orthogonality)
{
    for (unsigned long d : kOddModuli) {
        for (const auto& chi : enumerate_characters(d)) {
            CycloRational sum;
            for (unsigned long l = 0; l < d; ++l) {
                if (std::gcd(l, d) == 1) {
                    sum += chi(l);
                }
            }
            EXPECT_EQ(sum, chi.is_trivial() ? CycloRational(static_cast<long>(euler_phi(d))) : CycloRational(0))
                << chi.label();
        }
    }
}

TEST(Characters, Conductor)
{
    EXPECT_EQ(conductor(enumerate_characters(9)[0]), 1u);
    EXPECT_EQ(conductor(enumerate_characters(3)[1]), 3u);

    // The character mod 9 induced from the quadratic character mod 3.
    const auto quad3 = enumerate_characters(3)[1];
    std::size_t found = 0;
    for (const auto& chi : enumerate_characters(9)) {
        bool induced = true;
        for (unsigned long a = 0; a < 9; ++a) {
            if (std::gcd(a, 9ul) == 1 && !(chi(a) == quad3(a))) {
                induced = false;
            }
        }
        if (induced) {
            ++found;
            EXPECT_EQ(conductor(chi), 3u);
            EXPECT_FALSE(is_primitive(chi));
        }
    }
    EXPECT_EQ(found, 1u);

    // Mod 15: primitive count is phi(3)-1 times phi(5)-1 = 3.
    EXPECT_EQ(primitive_characters(15).size(), 3u);
    EXPECT_EQ(primitive_characters(9).size(), 4u);
    EXPECT_EQ(primitive_characters(1).size(), 1u);
}
