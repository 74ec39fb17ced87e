#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p3/chern.hpp"
#include "p3/errors.hpp"

using namespace p3;

namespace {

constexpr int kIterations = 1000;
const ChernData kCharge2{3, 0, 2, 0};

} // namespace

TEST(ChernCharacter, Examples)
{
    EXPECT_EQ(chern_character({1, 0, 0, 0}), ChowClass::one());
    EXPECT_EQ(chern_character(kCharge2), ChowClass(3, 0, -2, 0));
    // (c1^3 - 3c1c2 + 3c3)/6 = (-1 + 9 + 9)/6
    EXPECT_EQ(chern_character({2, -1, 3, 3}),
              ChowClass(2, -1, make_rational(-5, 2), make_rational(17, 6)));
}

TEST(ChernCharacter, ProductWithDual)
{
    EXPECT_EQ(chern_character(kCharge2) * chern_character(dual(kCharge2)), ChowClass(9, 0, -12, 0));
}

TEST(ChernFromCharacter, Examples)
{
    EXPECT_EQ(chern_from_character(ChowClass(3, 0, -2, 0), 3), kCharge2);
    EXPECT_EQ(chern_from_character(ChowClass::one(), 1), (ChernData{1, 0, 0, 0}));
    EXPECT_EQ(chern_from_character(ChowClass(3, 3, make_rational(-1, 2), make_rational(-3, 2)), 3),
              (ChernData{3, 3, 5, 3}));
}

TEST(ChernFromCharacter, Errors)
{
    EXPECT_THROW(chern_from_character(ChowClass(3, make_rational(1, 2), 0, 0), 3),
                 NonIntegralChernClass);
    EXPECT_THROW(chern_from_character(ChowClass(3, 0, make_rational(1, 3), 0), 3),
                 NonIntegralChernClass);
    EXPECT_THROW(chern_from_character(ChowClass(2, 0, 0, 0), 3), DomainError);
    EXPECT_THROW(chern_from_character(ChowClass(0, 0, 0, 0), 0), DomainError);
}

TEST(Dual, Examples)
{
    EXPECT_EQ(dual(kCharge2), kCharge2);
    EXPECT_EQ(dual({2, -1, 3, 3}), (ChernData{2, 1, 3, -3}));
    for (int i = 0; i < 100; ++i) {
        const auto d = oracle::random_chern();
        EXPECT_EQ(dual(dual(d)), d);
    }
}

TEST(Twist, Examples)
{
    EXPECT_EQ(twist({2, -1, 3, 3}, 2), (ChernData{2, 3, 5, 3}));
    for (std::int64_t n = 2; n <= 10; ++n)
        EXPECT_EQ(twist({3, 0, n, 0}, 1), (ChernData{3, 3, n + 3, n + 1}));
    const ChernData d{4, -2, 7, 1};
    EXPECT_EQ(twist(d, 0), d);
}

TEST(EulerCharacteristic, Examples)
{
    EXPECT_EQ(euler_characteristic(kCharge2, 1), 6);
    EXPECT_EQ(euler_characteristic({1, 0, 0, 0}, 0), 1);
    EXPECT_EQ(euler_characteristic(kCharge2, -2), 0);
    EXPECT_EQ(euler_characteristic(kCharge2, -5), -6);
}

TEST(EulerCharacteristic, NonIntegral)
{
    EXPECT_THROW(euler_characteristic({3, 0, 2, 1}, 0), NonIntegralChi);
}

TEST(EulerCharacteristic, SplitBundleOracle)
{
    for (int i = 0; i < kIterations; ++i) {
        const oracle::SplitBundle s{oracle::uniform(-6, 6), oracle::uniform(-6, 6),
                                    oracle::uniform(-6, 6)};
        const std::int64_t m = oracle::uniform(-10, 10);
        ASSERT_EQ(Rational(euler_characteristic(s.chern(), m)), s.chi(m));
    }
}

TEST(ChiPolynomial, Charge2)
{
    const auto p = chi_polynomial(kCharge2);
    EXPECT_EQ(p.coeff(3), make_rational(1, 2));
    EXPECT_EQ(p.coeff(2), 3);
    EXPECT_EQ(p.coeff(1), make_rational(7, 2));
    EXPECT_EQ(p.coeff(0), -1);
    EXPECT_EQ(p(1), 6);
    EXPECT_EQ(p(-2), 0);
}

TEST(ChiPolynomial, LineBundle)
{
    const auto p = chi_polynomial({1, 0, 0, 0});
    for (std::int64_t m = -10; m <= 10; ++m)
        EXPECT_EQ(p(m), oracle::binom3_poly(m + 3));
}

TEST(ChiPolynomial, LeadingCoefficientAndIntegrality)
{
    for (int i = 0; i < 200; ++i) {
        auto d = oracle::random_chern();
        // Random data need not be integral on every twist; keep those that are.
        bool integral = true;
        const auto p = chi_polynomial(d);
        EXPECT_EQ(p.coeff(3), make_rational(d.rank, 6));
        for (std::int64_t m = -50; m <= 50 && integral; ++m)
            integral = is_integer(p(m));
        if (integral)
            for (std::int64_t m = -5; m <= 5; ++m)
                EXPECT_EQ(p(m), euler_characteristic(d, m));
    }
    // Rank-3 parity-valid data is always integral.
    for (int i = 0; i < 200; ++i) {
        const auto d = oracle::random_rank3();
        const auto p = chi_polynomial(d);
        for (std::int64_t m = -50; m <= 50; ++m)
            ASSERT_TRUE(is_integer(p(m))) << to_string(d) << " m=" << m;
    }
}

TEST(ChiClosedForm, MatchesRiemannRoch)
{
    for (int i = 0; i < kIterations; ++i) {
        const auto d = oracle::random_rank3();
        const std::int64_t m = oracle::uniform(-10, 10);
        ASSERT_EQ(chi_rank3_closed_form(d, m), Rational(euler_characteristic(d, m)))
            << to_string(d) << " m=" << m;
    }
    EXPECT_THROW(chi_rank3_closed_form({2, 0, 0, 0}, 0), RankUnsupported);
}

TEST(ChiEndomorphisms, Examples)
{
    EXPECT_EQ(chi_endomorphisms(kCharge2), -15);
    EXPECT_EQ(chi_endomorphisms({3, 0, 0, 0}), 9);
    EXPECT_EQ(chi_endomorphisms({3, 1, 3, 1}), -23);
    EXPECT_THROW(chi_endomorphisms({2, 0, 1, 0}), RankUnsupported);
}

TEST(ChiEndomorphisms, ClosedFormAgreesWithRing)
{
    for (int i = 0; i < kIterations; ++i) {
        const auto d = oracle::random_rank3(30);
        ASSERT_EQ(chi_endomorphisms(d), chi_endomorphisms_closed_form(d)) << to_string(d);
    }
}

TEST(Parity, Examples)
{
    EXPECT_TRUE(validate_parity(kCharge2));
    EXPECT_FALSE(validate_parity({3, 0, 2, 1}));
    EXPECT_TRUE(validate_parity({3, 3, 5, 3}));
    EXPECT_FALSE(validate_parity({3, -3, 5, 0}));
    EXPECT_THROW(validate_parity({2, 0, 2, 0}), RankUnsupported);
}

TEST(ChernProperty, CharacterRoundTrip)
{
    for (int i = 0; i < kIterations; ++i) {
        const auto d = oracle::random_chern(6, 40);
        ASSERT_EQ(chern_from_character(chern_character(d), d.rank), d);
    }
}

TEST(ChernProperty, TwistGroupLaw)
{
    for (int i = 0; i < 200; ++i) {
        const auto d = oracle::random_chern();
        const std::int64_t a = oracle::uniform(-10, 10);
        const std::int64_t b = oracle::uniform(-10, 10);
        ASSERT_EQ(twist(twist(d, a), b), twist(d, a + b));
    }
}

TEST(ChernProperty, SerreAntisymmetry)
{
    for (int i = 0; i < kIterations; ++i) {
        const auto d = oracle::random_rank3();
        const std::int64_t m = oracle::uniform(-20, 20);
        ASSERT_EQ(euler_characteristic(d, m), -euler_characteristic(dual(d), -m - 4));
    }
}
