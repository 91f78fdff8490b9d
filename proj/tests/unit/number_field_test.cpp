#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nfk;
using nfk::testing::make_field;

TEST(NumberFieldTest, CubicInvariants)
{
    const NumberField k = make_field({-9, -1, 0, 1}, 2);
    EXPECT_EQ(k.degree(), 3);
    EXPECT_EQ(k.discriminant(), -2183);
    EXPECT_EQ(k.r1(), 1);
    EXPECT_EQ(k.r2(), 1);
    EXPECT_NEAR(k.minkowski_bound().get_d(), 13.2198, 1e-3);
}

TEST(NumberFieldTest, GaussianAndCyclotomic)
{
    const NumberField gi = make_field({1, 0, 1}, 2);
    EXPECT_EQ(gi.discriminant(), -4);
    EXPECT_EQ(gi.r1(), 0);
    EXPECT_EQ(gi.r2(), 1);
    EXPECT_LT(gi.minkowski_bound().get_d(), 2.0);
    const NumberField z3 = make_field({1, 1, 1}, 3);
    EXPECT_TRUE(z3.contains_zeta(3));
    EXPECT_TRUE(gi.contains_zeta(2));
    EXPECT_FALSE(gi.contains_zeta(3));
    EXPECT_NEAR(make_field({5, 0, 1}).minkowski_bound().get_d(), 2.847, 1e-2);
}

TEST(NumberFieldTest, ConstructionErrors)
{
    EXPECT_THROW(make_field({-1, 0, 1}), InvalidInput);                  // reducible
    EXPECT_THROW(make_field({23, 0, 1}), Unsupported);                   // Z[sqrt -23] is not maximal
    EXPECT_THROW(make_field({1, 0, 1}, 3), InvalidInput);                // no cube roots of unity
    EXPECT_THROW(make_field({2, 0, 1}).require_same(make_field({1, 0, 1})), Error);
}

TEST(NumberFieldTest, ElementArithmetic)
{
    const NumberField k = make_field({-9, -1, 0, 1});
    const IntVec t = k.generator();
    const IntVec t2 = k.mul(t, t);
    EXPECT_EQ(k.mul(t, t2), (IntVec{9, 1, 0}));
    const IntVec a{3, -1, 2};
    EXPECT_EQ(k.mul(a, k.one()), a);
    const IntVec s = k.add(k.one(), t);
    EXPECT_EQ(k.pow(s, 2), k.mul(s, s));
    EXPECT_EQ(k.pow(s, 5), k.mul(k.pow(s, 2), k.pow(s, 3)));
}

TEST(NumberFieldTest, NormAndTrace)
{
    const NumberField k = make_field({-9, -1, 0, 1});
    EXPECT_EQ(k.norm(k.from_int(7)), 343);
    EXPECT_EQ(k.trace(k.from_int(7)), 21);
    EXPECT_EQ(k.norm(k.generator()), 9);
    EXPECT_EQ(k.trace(k.generator()), 0);
    const NumberField gi = make_field({1, 0, 1});
    EXPECT_EQ(gi.norm(gi.generator()), 1);
    EXPECT_EQ(gi.trace(gi.generator()), 0);
}

TEST(NumberFieldTest, RandomNormTraceIdentities)
{
    for (const auto& fc : nfk::testing::field_matrix()) {
        const NumberField k = make_field(fc);
        nfk::testing::Generator gen(k, 21);
        for (int i = 0; i < 50; ++i) {
            const IntVec a = gen.element(), b = gen.element();
            EXPECT_EQ(k.norm(k.mul(a, b)), k.norm(a) * k.norm(b)) << fc.name;
            EXPECT_EQ(k.trace(k.add(a, b)), k.trace(a) + k.trace(b)) << fc.name;
        }
    }
}

TEST(NumberFieldTest, Embeddings)
{
    const NumberField k = make_field({-9, -1, 0, 1});
    for (const auto& z : k.embed(k.from_int(2))) EXPECT_NEAR(static_cast<double>(std::abs(z - Complex(2))), 0, 1e-15);
    long double prod = 1;
    for (const auto& z : k.embed(k.generator())) prod *= std::abs(z);
    prod *= std::abs(k.embed(k.generator()).back());  // complex place counted twice
    EXPECT_NEAR(static_cast<double>(prod), 9.0, 1e-10);
    const NumberField gi = make_field({1, 0, 1});
    const auto e = gi.embed(gi.generator());
    ASSERT_EQ(e.size(), 1u);
    EXPECT_NEAR(static_cast<double>(std::abs(e[0].real())), 0, 1e-15);
    EXPECT_NEAR(static_cast<double>(std::abs(e[0].imag())), 1, 1e-15);
}

TEST(NumberFieldTest, EmbeddingMagnitudesMatchNorm)
{
    for (const auto& fc : nfk::testing::field_matrix()) {
        const NumberField k = make_field(fc);
        nfk::testing::Generator gen(k, 22);
        for (int i = 0; i < 30; ++i) {
            const IntVec a = gen.element();
            const auto e = k.embed(a);
            long double logp = 0;
            for (std::size_t j = 0; j < e.size(); ++j)
                logp += (j < static_cast<std::size_t>(k.r1()) ? 1 : 2) * std::log(std::abs(e[j]));
            const long double expect = std::log(std::fabs(to_long_double(k.norm(a))));
            EXPECT_NEAR(static_cast<double>(logp), static_cast<double>(expect), 1e-12) << fc.name;
        }
    }
}

TEST(NumberFieldTest, AlgebraicNumbers)
{
    const NumberField k = make_field({1, 1, 1});
    const AlgebraicNumber z(k, k.generator());
    EXPECT_EQ(z.pow(3), AlgebraicNumber::from_int(k, 1));
    const AlgebraicNumber a(k, IntVec{2, 3});
    EXPECT_EQ(a * a.inverse(), AlgebraicNumber::from_int(k, 1));
    EXPECT_EQ(a.norm(), BigRational(k.norm(IntVec{2, 3})));
    const AlgebraicNumber half(k, std::vector<BigRational>{BigRational(1, 2), BigRational(0)});
    EXPECT_FALSE(half.is_integral());
    EXPECT_EQ((half + half), AlgebraicNumber::from_int(k, 1));
}

TEST(NumberFieldTest, Deterministic)
{
    const NumberField a = make_field({-9, -1, 0, 1}), b = make_field({-9, -1, 0, 1});
    EXPECT_EQ(a.discriminant(), b.discriminant());
    EXPECT_TRUE(a.same_as(b));
    for (std::size_t i = 0; i < a.roots().size(); ++i) EXPECT_EQ(a.roots()[i], b.roots()[i]);
}
