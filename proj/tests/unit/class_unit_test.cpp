#include "fixtures.hpp"

#include "nfk/class_group.hpp"
#include "nfk/unit_group.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nfk;
using nfk::testing::make_field;

TEST(ClassGroupTest, KnownClassNumbers)
{
    EXPECT_EQ(class_group(make_field({0, 1})).h(), 1u);
    EXPECT_EQ(class_group(make_field({1, 0, 1})).h(), 1u);
    EXPECT_EQ(class_group(make_field({1, 1, 1})).h(), 1u);
    EXPECT_EQ(class_group(make_field({5, 0, 1})).group().divisors(), (std::vector<long>{2}));
    EXPECT_EQ(class_group(make_field({6, -1, 1})).h(), 3u);   // Q(sqrt -23)
    EXPECT_EQ(class_group(make_field({-79, 0, 1})).h(), 3u);  // Q(sqrt 79)
    EXPECT_EQ(class_group(make_field({-9, -1, 0, 1})).h(), 2u);
    EXPECT_EQ(class_group(make_field({14, 0, 1})).group().divisors(), (std::vector<long>{4}));
    EXPECT_EQ(class_group(make_field({30, 0, 1})).group().divisors(), (std::vector<long>{2, 2}));
}

TEST(ClassGroupTest, KnownHIsChecked)
{
    const NumberField m5 = make_field({5, 0, 1});
    EXPECT_EQ(compute_class_group(m5, 2).h(), 2u);
    EXPECT_THROW(compute_class_group(m5, 3), InvalidInput);
}

TEST(ClassGroupTest, ClassOfPrimes)
{
    const NumberField m5 = make_field({5, 0, 1});
    const ClassGroup& cg = class_group(m5);
    const PrimeIdeal& p2 = primes_above(m5, 2)[0];
    EXPECT_FALSE(cg.group().is_identity(cg.class_of(p2)));
    EXPECT_TRUE(cg.group().is_identity(cg.class_of(p2.ideal() * p2.ideal())));
    EXPECT_TRUE(cg.is_principal(Ideal::from_element(m5, IntVec{1, 1})));
    // primes above 3 and 7 lie in the nontrivial class
    for (const auto& q : primes_above(m5, 3)) EXPECT_EQ(cg.class_of(q), cg.class_of(p2));
    for (const auto& q : primes_above(m5, 29)) EXPECT_TRUE(cg.group().is_identity(cg.class_of(q)));
}

TEST(ClassGroupTest, RepresentativesRoundTrip)
{
    for (const auto& poly : std::vector<std::vector<long>>{{5, 0, 1}, {6, -1, 1}, {-9, -1, 0, 1}, {14, 0, 1}}) {
        const NumberField k = make_field(poly);
        const ClassGroup& cg = class_group(k);
        for (const auto& c : cg.group().elements()) {
            EXPECT_EQ(cg.class_of(cg.representative(c)), c);
            const Ideal r = cg.ell_free_representative(c, 2);
            EXPECT_EQ(cg.class_of(r), c);
            EXPECT_EQ(r.norm() % 2, 1);
        }
    }
}

TEST(UnitGroupTest, Torsion)
{
    const UnitGroup& gi = unit_group(make_field({1, 0, 1}));
    EXPECT_EQ(gi.torsion_order(), 4);
    EXPECT_EQ(gi.rank(), 0);
    EXPECT_EQ(gi.regulator(), 1);
    EXPECT_EQ(unit_group(make_field({5, 0, 1})).torsion_order(), 2);
    EXPECT_EQ(unit_group(make_field({1, 1, 1})).torsion_order(), 6);
}

TEST(UnitGroupTest, FundamentalUnits)
{
    const NumberField k = make_field({-9, -1, 0, 1});
    const UnitGroup& u = unit_group(k);
    ASSERT_EQ(u.rank(), 1);
    EXPECT_TRUE(u.certified());
    EXPECT_EQ(abs(k.norm(u.fundamental_units()[0])), 1);
    EXPECT_NEAR(static_cast<double>(u.regulator()), 4.02948, 1e-4);
    const UnitGroup& s2 = unit_group(make_field({-2, 0, 1}));
    EXPECT_NEAR(static_cast<double>(regulator(s2)), std::log(1 + std::sqrt(2.0)), 1e-9);
    EXPECT_NEAR(static_cast<double>(unit_group(make_field({-79, 0, 1})).regulator()), std::log(80 + 9 * std::sqrt(79.0)),
                1e-9);
}

TEST(UnitGroupTest, UnitsGenerateTheUnitIdeal)
{
    for (const auto& poly : std::vector<std::vector<long>>{{-9, -1, 0, 1}, {-2, 0, 1}, {-79, 0, 1}, {1, 1, 1}}) {
        const NumberField k = make_field(poly);
        const UnitGroup& u = unit_group(k);
        EXPECT_EQ(Ideal::from_element(k, u.torsion_generator()), Ideal::unit(k));
        for (const auto& e : u.fundamental_units()) EXPECT_EQ(Ideal::from_element(k, e), Ideal::unit(k));
    }
}

TEST(UnitGroupTest, CoordinatesRoundTrip)
{
    const NumberField k = make_field({-9, -1, 0, 1});
    const UnitGroup& u = unit_group(k);
    for (int t = 0; t < 2; ++t)
        for (long e = -3; e <= 3; ++e) {
            const IntVec x = u.element({t, {e}});
            const auto c = u.coordinates(x);
            EXPECT_EQ(c.torsion, t);
            EXPECT_EQ(c.exponents, std::vector<long>{e});
        }
    EXPECT_THROW(u.coordinates(k.from_int(2)), InvalidInput);
}

TEST(UnitGroupTest, KnownUnitsAreVerified)
{
    const NumberField s2 = make_field({-2, 0, 1});
    EXPECT_NO_THROW(unit_group_from_known(s2, {IntVec{1, 1}}));
    EXPECT_THROW(unit_group_from_known(s2, {IntVec{3, 2}}), InvalidInput);  // a square of 1+sqrt2
    EXPECT_THROW(unit_group_from_known(s2, {IntVec{2, 1}}), InvalidInput);  // norm 2
}

TEST(UnitCosetsTest, Counts)
{
    const auto count = [](const std::vector<long>& poly, int ell) {
        return UnitCosets(unit_group(make_field(poly)), ell).size();
    };
    EXPECT_EQ(count({1, 0, 1}, 2), 2u);
    EXPECT_EQ(count({5, 0, 1}, 2), 2u);
    EXPECT_EQ(count({-9, -1, 0, 1}, 2), 4u);
    EXPECT_EQ(count({1, 1, 1}, 3), 3u);
    EXPECT_EQ(count({-2, 0, 1}, 2), 4u);
    EXPECT_EQ(count({0, 1}, 2), 2u);
}

TEST(UnitCosetsTest, RatiosAreNotPowers)
{
    for (const auto& [poly, ell] : std::vector<std::pair<std::vector<long>, int>>{
             {{1, 0, 1}, 2}, {{-9, -1, 0, 1}, 2}, {{1, 1, 1}, 3}, {{-2, 0, 1}, 2}}) {
        const NumberField k = make_field(poly);
        const UnitGroup& u = unit_group(k);
        const UnitCosets cosets(u, ell);
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            EXPECT_EQ(cosets.index_of(cosets.rep(i)), i);
            for (std::size_t j = 0; j < cosets.size(); ++j) {
                if (i == j) continue;
                // rep_i / rep_j = ell-th power of a unit would put them in one coset
                const AlgebraicNumber ratio = AlgebraicNumber(k, cosets.rep(i)) / AlgebraicNumber(k, cosets.rep(j));
                const auto c = u.coordinates(ratio.numerator());
                bool power = true;
                for (long e : c.exponents) power = power && e % ell == 0;
                const int w = u.torsion_order();
                bool torsion_power = false;
                for (int t = 0; t < w; ++t) torsion_power = torsion_power || (ell * t) % w == c.torsion;
                EXPECT_FALSE(power && torsion_power);
            }
        }
    }
}

TEST(UnitCosetsTest, ProductsAndPowers)
{
    const UnitCosets c(unit_group(make_field({-9, -1, 0, 1})), 2);
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(c.power_index(i, 2), 0u);
        EXPECT_EQ(c.product_index(i, 0), i);
        for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c.product_index(i, j), c.product_index(j, i));
    }
}
