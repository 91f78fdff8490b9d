#include "fixtures.hpp"

#include "nfk/experiment.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/kummer.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace nfk;
using nfk::testing::make_field;

namespace {

const KummerField& rationals()
{
    static const KummerField kf(make_field({0, 1}, 2, "Q"), 2);
    return kf;
}

bool squarefree(long d)
{
    for (const auto& f : factor_integer(BigInt(d)))
        if (f.exponent > 1) return false;
    return true;
}

}  // namespace

TEST(KummerTest, NormalizationOverQ)
{
    const KummerField& kf = rationals();
    const NumberField& q = kf.field();
    const KummerDatum five = kf.normalize(q.from_int(5));
    EXPECT_EQ(five.gamma, q.from_int(5));
    EXPECT_TRUE(five.parts.ell_part.is_one());
    EXPECT_TRUE(five.parts.power_root.is_one());
    EXPECT_EQ(kf.normalize(q.from_int(24)).gamma, q.from_int(6));
    EXPECT_EQ(kf.normalize(q.from_int(-75)).gamma, q.from_int(-3));
    EXPECT_THROW(kf.normalize(q.from_int(9)), InvalidInput);
    EXPECT_THROW(kf.normalize(q.from_int(0)), InvalidInput);
}

TEST(KummerTest, QuadraticDiscriminants)
{
    const KummerField& kf = rationals();
    const auto disc = [&](long d) { return kf.relative_discriminant(kf.normalize(kf.field().from_int(d))).norm; };
    EXPECT_EQ(disc(3), 12);
    EXPECT_EQ(disc(5), 5);
    EXPECT_EQ(disc(-1), 4);
    EXPECT_EQ(disc(2), 8);
    EXPECT_EQ(disc(-3), 3);
    for (long d = -300; d <= 300; ++d) {
        if (d == 0 || d == 1 || !squarefree(d)) continue;
        const long expect = (((d % 4) + 4) % 4 == 1) ? std::labs(d) : 4 * std::labs(d);
        EXPECT_EQ(disc(d), expect) << d;
    }
}

TEST(KummerTest, OddPrimeExponent)
{
    const NumberField gi = make_field({1, 0, 1}, 2);
    const KummerField kf(gi, 2);
    const KummerDatum d = kf.normalize(IntVec{2, 1});  // norm 5, a prime
    const Discriminant disc = kf.relative_discriminant(d);
    for (const auto& [q, e] : disc.ell_free_part.terms()) EXPECT_EQ(e, 1);
}

TEST(KummerTest, ExponentCapAboveTwo)
{
    const NumberField gi = make_field({1, 0, 1}, 2);
    const KummerField kf(gi, 2);
    EXPECT_EQ(kf.admissible_exponents(0), (std::vector<int>{0, 2, 3, 4, 5}));
    for (const auto& rec : kf.collect(2000))
        for (const auto& [q, e] : rec.discriminant.ell_part.terms()) EXPECT_LE(e, 5);
}

TEST(KummerTest, CyclotomicTowerExponents)
{
    // Q(zeta9)/Q(zeta3) = Q(zeta3)(zeta3^(1/3)) has discriminant q^6 above 3.
    const NumberField z3 = make_field({1, 1, 1}, 3);
    const KummerField kf(z3, 3);
    const Discriminant d = kf.relative_discriminant(kf.normalize(z3.generator()));
    ASSERT_EQ(d.delta.terms().size(), 1u);
    EXPECT_EQ(d.delta.terms()[0].second, 6);
    // Q(zeta3, 2^(1/3)) has absolute discriminant -2^4 3^7, so N(Delta) = 2^4 3^4.
    EXPECT_EQ(kf.relative_discriminant(kf.normalize(z3.from_int(2))).norm, 16 * 81);
}

TEST(KummerTest, TraceFormDiscriminant)
{
    const NumberField q = make_field({0, 1});
    const TraceFormCheck t = trace_form_discriminant(q, q.from_int(3), 2);
    EXPECT_TRUE(t.agrees);
    EXPECT_EQ(t.formula, AlgebraicNumber::from_int(q, 12));
    const NumberField z3 = make_field({1, 1, 1}, 3);
    const TraceFormCheck c = trace_form_discriminant(z3, z3.generator(), 3);
    EXPECT_TRUE(c.agrees);
    const AlgebraicNumber theta(z3, z3.generator());
    EXPECT_EQ(c.formula, AlgebraicNumber::from_int(z3, -27) * theta * theta);
}

TEST(KummerTest, TraceFormRandom)
{
    for (const auto& [poly, ell] : std::vector<std::pair<std::vector<long>, int>>{
             {{1, 1, 1}, 3}, {{1, 0, 1}, 2}, {{-9, -1, 0, 1}, 2}, {{5, 0, 1}, 2}}) {
        const NumberField k = make_field(poly, ell);
        nfk::testing::Generator gen(k, 51);
        for (int i = 0; i < 25; ++i) EXPECT_TRUE(trace_form_discriminant(k, gen.element(9), ell).agrees);
    }
}

TEST(KummerTest, SteinitzOverQIsTrivial)
{
    const KummerField& kf = rationals();
    const KummerDatum d = kf.normalize(kf.field().from_int(3));
    const Discriminant disc = kf.relative_discriminant(d);
    const SteinitzResult st = kf.steinitz_class(d, disc);
    EXPECT_EQ(st.ideal.to_ideal(), Ideal::from_integer(kf.field(), 2));
    EXPECT_TRUE(st.cls.empty());
}

TEST(KummerTest, SteinitzInRealizableSubgroup)
{
    const NumberField m5 = make_field({5, 0, 1}, 2);
    const KummerField kf(m5, 2);
    const auto realizable = kf.realizable_classes();
    std::set<std::uint64_t> seen;
    for (const auto& rec : kf.collect(3000)) {
        const auto idx = kf.classes().group().index(rec.steinitz.cls);
        EXPECT_TRUE(realizable[idx]);
        seen.insert(idx);
        EXPECT_TRUE(steinitz_identity_holds(rec));
    }
    EXPECT_EQ(seen.size(), 2u);
}

TEST(KummerTest, RealizableSubgroup)
{
    const NumberField m5 = make_field({5, 0, 1});
    const ClassGroup& cg = class_group(m5);
    EXPECT_EQ(realizable_class_subgroup(cg, 2), (std::vector<bool>{true, true}));
    EXPECT_EQ(realizable_class_subgroup(cg, 3), (std::vector<bool>{true, true}));
    EXPECT_EQ(realizable_class_subgroup(class_group(make_field({14, 0, 1})), 5),
              (std::vector<bool>{true, false, true, false}));
}

TEST(KummerTest, Isomorphism)
{
    const NumberField z3 = make_field({1, 1, 1}, 3);
    const KummerField kf(z3, 3);
    const IntVec g{2, 5};
    EXPECT_TRUE(kf.is_isomorphic(kf.normalize(g), kf.normalize(z3.mul(g, g))));
    EXPECT_TRUE(kf.ideal_criterion(kf.normalize(g), kf.normalize(z3.mul(g, g))));
    const KummerField& q = rationals();
    EXPECT_FALSE(q.is_isomorphic(q.normalize(q.field().from_int(3)), q.normalize(q.field().from_int(5))));
    const NumberField c = make_field({-9, -1, 0, 1}, 2);
    const KummerField kc(c, 2);
    const IntVec u = unit_group(c).fundamental_units()[0];
    const IntVec a{3, 1, 0};
    EXPECT_FALSE(kc.is_isomorphic(kc.normalize(a), kc.normalize(c.mul(u, a))));
    EXPECT_TRUE(kc.is_isomorphic(kc.normalize(a), kc.normalize(c.mul(c.mul(u, u), a))));
}

TEST(KummerTest, PowerTest)
{
    const NumberField z3 = make_field({1, 1, 1}, 3);
    const KummerField kf(z3, 3);
    const IntVec g{2, 5};
    EXPECT_TRUE(kf.is_ell_power(AlgebraicNumber(z3, z3.pow(g, 3))));
    EXPECT_FALSE(kf.is_ell_power(AlgebraicNumber(z3, z3.pow(g, 2))));
    EXPECT_TRUE(kf.is_ell_power(AlgebraicNumber(z3, z3.generator())) == false);
}

TEST(KummerTest, EnumerationOverQMatchesCensus)
{
    const auto recs = rationals().collect(100);
    long census = 0;
    for (long d = -100; d <= 100; ++d) {
        if (d == 0 || d == 1 || !squarefree(d)) continue;
        const long disc = (((d % 4) + 4) % 4 == 1) ? std::labs(d) : 4 * std::labs(d);
        if (disc <= 100) ++census;
    }
    EXPECT_EQ(static_cast<long>(recs.size()), census);
    EXPECT_EQ(census, 61);
    BigInt last = 0;
    for (const auto& r : recs) {
        EXPECT_LE(last, r.discriminant.norm);
        last = r.discriminant.norm;
    }
}

TEST(KummerTest, EnumerationMultiplicity)
{
    const NumberField z3 = make_field({1, 1, 1}, 3);
    const KummerField kf(z3, 3);
    const auto all = kf.collect(1000, {false});
    const auto unique = kf.collect(1000);
    std::map<TupleKey, int> mult;
    for (const auto& r : all) ++mult[r.orbit_key];
    for (const auto& [k, m] : mult) EXPECT_EQ(m, 2) << k.str();
    EXPECT_EQ(unique.size(), mult.size());
    std::set<TupleKey> keys;
    for (const auto& r : unique) EXPECT_TRUE(keys.insert(r.orbit_key).second);
    for (std::size_t i = 0; i < unique.size(); ++i)
        for (std::size_t j = i + 1; j < unique.size(); ++j)
            EXPECT_FALSE(kf.is_isomorphic(unique[i].datum, unique[j].datum));
}

TEST(KummerTest, EnumerationIsDeterministic)
{
    const NumberField gi = make_field({1, 0, 1}, 2);
    const auto a = KummerField(gi, 2).collect(500);
    const auto b = enumerate_extensions(gi, 2, 500);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].datum.key, b[i].datum.key);
}
