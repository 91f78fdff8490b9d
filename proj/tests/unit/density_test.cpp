#include "fixtures.hpp"

#include "nfk/density.hpp"
#include "nfk/zeta.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nfk;
using nfk::testing::make_field;

TEST(DensityTest, CubicTable)
{
    const KummerField kf(make_field({-9, -1, 0, 1}, 2), 2);
    const auto r = enumerate_R(kf);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0].norm(), 1);
    EXPECT_EQ(r[1].norm(), 64);
    EXPECT_EQ(r[2].norm(), 512);
    EXPECT_EQ(rho(kf, r[0]), BigRational(1, 16));
    EXPECT_EQ(rho(kf, r[1]), BigRational(7, 16));
    EXPECT_EQ(rho(kf, r[2]), BigRational(1, 2));
}

TEST(DensityTest, RamificationSets)
{
    const KummerField kf(make_field({-9, -1, 0, 1}, 2), 2);
    const PrimeIdeal& q = kf.ell_primes()[0];
    const FactoredIdeal q3(kf.field(), {{q, 3}}), q2(kf.field(), {{q, 2}});
    const RamificationProfile a = build_ramification_sets(kf, q3);
    EXPECT_EQ(a.maximal.size(), 1u);
    EXPECT_TRUE(a.congruence.empty());
    const RamificationProfile b = build_ramification_sets(kf, q2);
    EXPECT_TRUE(b.maximal.empty());
    ASSERT_EQ(b.congruence.size(), 1u);
    EXPECT_EQ(b.modulus, q2);
    EXPECT_EQ(build_ramification_sets(kf, FactoredIdeal(kf.field())).congruence.size(), 1u);
    EXPECT_THROW(build_ramification_sets(kf, FactoredIdeal(kf.field(), {{q, 1}})), InvalidInput);
}

TEST(DensityTest, PossibleEllParts)
{
    const KummerField q(make_field({0, 1}, 2), 2);
    std::vector<BigInt> norms;
    for (const auto& r : enumerate_R(q)) norms.push_back(r.norm().get_num());
    EXPECT_EQ(norms, (std::vector<BigInt>{1, 4, 8}));
    const KummerField gi(make_field({1, 0, 1}, 2), 2);
    EXPECT_EQ(enumerate_R(gi).size(), 5u);
}

TEST(DensityTest, RhoSumsToOne)
{
    for (const auto& fc : nfk::testing::field_matrix()) {
        const DensityReport r = density_report(KummerField(make_field(fc), fc.ell));
        EXPECT_EQ(r.total, 1) << fc.name;
        for (const auto& row : r.rows) {
            EXPECT_GE(row.rho, 0);
            EXPECT_LE(row.rho, 1);
        }
    }
}

TEST(DensityTest, IdentityValues)
{
    EXPECT_EQ(identity_check(make_field({-9, -1, 0, 1}, 2)), BigRational(1, 2));
    EXPECT_EQ(identity_check(make_field({1, 0, 1}, 2)), BigRational(1, 2));
    EXPECT_EQ(identity_check(make_field({0, 1}, 2)), 1);
    EXPECT_EQ(identity_check(make_field({5, 0, 1}, 2)), BigRational(1, 2));
    EXPECT_EQ(identity_check(make_field({-2, 0, 1}, 2)), 1);
}

TEST(DensityTest, RhoIndependentOfRepresentatives)
{
    // Same field under the substitution x -> x + 1 (different power basis, different residue reps).
    const KummerField a(make_field({-9, -1, 0, 1}, 2), 2);
    const KummerField b(make_field({-9, 2, -3, 1}, 2), 2);  // (x-1)^3 - (x-1) - 9
    const DensityReport ra = density_report(a), rb = density_report(b);
    ASSERT_EQ(ra.rows.size(), rb.rows.size());
    for (std::size_t i = 0; i < ra.rows.size(); ++i) EXPECT_EQ(ra.rows[i].rho, rb.rows[i].rho);
}

TEST(ZetaTest, Constants)
{
    const ZetaConstants q = zeta_constants(make_field({0, 1}), 2);
    EXPECT_NEAR(static_cast<double>(q.residue), 1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(q.at_two.value), M_PI * M_PI / 6, 1e-8);
    EXPECT_NEAR(static_cast<double>(zeta_residue(make_field({1, 0, 1}))), M_PI / 4, 1e-6);
    // 2 pi h / (w sqrt 20) with h = 2, w = 2
    EXPECT_NEAR(static_cast<double>(zeta_residue(make_field({5, 0, 1}))), 2 * M_PI / std::sqrt(20.0), 1e-6);
    EXPECT_NEAR(static_cast<double>(riemann_zeta(3)), 1.2020569031595942, 1e-12);
}

TEST(ZetaTest, ErrorBarsAndPrecision)
{
    const NumberField gi = make_field({1, 0, 1});
    const ZetaValue z = dedekind_zeta(gi, 2);
    EXPECT_GT(z.error, 0);
    EXPECT_LT(z.error, 1e-4);
    // zeta_{Q(i)}(2) = zeta(2) L(2, chi_4) = zeta(2) * Catalan
    EXPECT_NEAR(static_cast<double>(z.value), M_PI * M_PI / 6 * 0.915965594177219, 2 * static_cast<double>(z.error) + 1e-9);
    EXPECT_THROW(zeta_constants(gi, 2, 100000, 1e-30), InvalidInput);
}

TEST(CensusTest, OddSquarefreeIntegers)
{
    const NumberField q = make_field({0, 1});
    const SquarefreeCensus c = count_squarefree_ideals_in_class(q, {}, Ideal::from_integer(q, 2), 100000);
    EXPECT_NEAR(static_cast<double>(c.ratio), 1.0, 0.005);
    EXPECT_NEAR(static_cast<double>(c.predicted), 4 / (M_PI * M_PI) * 100000, 1);
}

TEST(CensusTest, ClassesOfQm5)
{
    const NumberField m5 = make_field({5, 0, 1});
    const auto a = count_squarefree_ideals_in_class(m5, {0}, Ideal::unit(m5), 50000);
    const auto b = count_squarefree_ideals_in_class(m5, {1}, Ideal::unit(m5), 50000);
    EXPECT_NEAR(static_cast<double>(a.count) / static_cast<double>(b.count), 1.0, 0.05);
    EXPECT_NEAR(static_cast<double>(a.ratio), 1.0, 0.05);
}

TEST(CensusTest, ConvergesWithBound)
{
    const NumberField gi = make_field({1, 0, 1});
    const double small = std::fabs(static_cast<double>(count_squarefree_ideals_in_class(gi, {}, Ideal::unit(gi), 1000).ratio) - 1);
    const double large = std::fabs(static_cast<double>(count_squarefree_ideals_in_class(gi, {}, Ideal::unit(gi), 100000).ratio) - 1);
    EXPECT_LT(large, small);
    EXPECT_LT(large, 0.05);
}

TEST(EquidistributionTest, Cells)
{
    const NumberField q = make_field({0, 1});
    const auto r = generator_equidistribution_test(q, Ideal::from_integer(q, 4), Ideal::unit(q), 100000);
    EXPECT_LT(static_cast<double>(r.max_deviation), 0.02);
    const auto trivial = generator_equidistribution_test(q, Ideal::unit(q), Ideal::unit(q), 1000);
    EXPECT_EQ(trivial.cells.size(), 1u);
    EXPECT_EQ(static_cast<double>(trivial.max_deviation), 0.0);
    const NumberField gi = make_field({1, 0, 1});
    const Ideal m = ideal_pow(primes_above(gi, 2)[0].ideal(), 4);
    EXPECT_LT(static_cast<double>(generator_equidistribution_test(gi, m, Ideal::unit(gi), 100000).max_deviation), 0.05);
}
