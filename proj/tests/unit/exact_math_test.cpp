#include "nfk/bigint.hpp"
#include "nfk/error.hpp"
#include "nfk/int_matrix.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nfk;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long h)
{
    std::uniform_int_distribution<long> d(-h, h);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> mult(-3, 3);
    for (int step = 0; step < 12; ++step) {
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const long k = mult(rng);
        for (std::size_t r = 0; r < n; ++r) u(r, j) += k * u(r, i);  // column op
    }
    return u;
}

// Cofactor expansion, the determinant oracle.
BigInt cofactor_det(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    BigInt d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        d += ((j % 2) ? -1 : 1) * m(0, j) * cofactor_det(minor);
    }
    return d;
}

}  // namespace

TEST(BigRationalTest, FormatsAndParses)
{
    EXPECT_EQ(to_string(BigRational(7, 16)), "7/16");
    EXPECT_EQ(to_string(BigRational(4, 2)), "2");
    EXPECT_EQ(parse_rational("-9/128"), BigRational(-9, 128));
    EXPECT_EQ(parse_rational("6/4"), BigRational(3, 2));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(BigIntTest, FloorDivisionAndGcd)
{
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_mod(-7, 2), 1);
    EXPECT_EQ(floor_div(7, -2), -4);
    BigInt u, v;
    const BigInt g = xgcd(240, 46, u, v);
    EXPECT_EQ(g, 2);
    EXPECT_EQ(u * 240 + v * 46, g);
    EXPECT_EQ(pow(BigInt(3), 40), BigInt("12157665459056928801"));
    EXPECT_THROW(to_int64(pow(BigInt(2), 70)), Error);
}

TEST(IntegerFactorTest, FactorsAndRoots)
{
    const auto f = factor_integer(BigInt(-2183));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].prime, 37);
    EXPECT_EQ(f[1].prime, 59);
    EXPECT_TRUE(is_prime(BigInt("1000000007")));
    EXPECT_FALSE(is_prime(std::uint64_t{561}));
    EXPECT_EQ(primes_up_to(30).size(), 10u);
    BigInt r;
    EXPECT_TRUE(exact_root(BigInt(3375), 3, r));
    EXPECT_EQ(r, 15);
    EXPECT_FALSE(exact_root(BigInt(3376), 3, r));
    EXPECT_EQ(root_floor(BigInt(1000000), 2), 1000);
    EXPECT_EQ(root_floor(BigInt(999999), 2), 999);
}

TEST(HnfTest, IdentityIsFixed)
{
    const HnfResult r = hnf(IntMatrix::identity(3));
    EXPECT_EQ(r.h, IntMatrix::identity(3));
    EXPECT_EQ(r.u, IntMatrix::identity(3));
}

TEST(HnfTest, SmallLatticeMatchesBruteForce)
{
    const IntMatrix m{{4, 2}, {0, 2}};
    const IntMatrix h = hnf_square(m);
    // Lattice membership by brute force over bounded combinations.
    std::set<std::pair<long, long>> lattice, from_h;
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            lattice.insert({4 * a + 2 * b, 2 * b});
            const BigInt x = h(0, 0) * a + h(0, 1) * b, y = h(1, 0) * a + h(1, 1) * b;
            from_h.insert({x.get_si(), y.get_si()});
        }
    for (long x = -8; x <= 8; ++x)
        for (long y = -8; y <= 8; ++y) EXPECT_EQ(lattice.count({x, y}), from_h.count({x, y})) << x << "," << y;
    EXPECT_EQ(h(1, 0), 0);
    EXPECT_EQ(abs(det_int(h)), 8);
}

TEST(HnfTest, TransformIsUnimodular)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const IntMatrix m = random_matrix(rng, 3, 4, 9);
        const HnfResult r = hnf(m);
        EXPECT_EQ(m * r.u, r.h);
        EXPECT_EQ(abs(det_int(r.u)), 1);
    }
}

TEST(HnfTest, InvariantUnderUnimodularColumnOps)
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const IntMatrix m = random_matrix(rng, 3, 3, 20);
        if (det_int(m) == 0) continue;
        EXPECT_EQ(hnf_basis(m), hnf_basis(m * random_unimodular(rng, 3)));
    }
}

TEST(HnfTest, UpperTriangularWithReducedEntries)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix m = random_matrix(rng, 3, 5, 15);
        const IntMatrix h = hnf_square(m);
        if (h.cols() != 3) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_GT(h(i, i), 0);
            for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(h(i, j), 0);
            for (std::size_t j = i + 1; j < 3; ++j) {
                EXPECT_GE(h(i, j), 0);
                EXPECT_LT(h(i, j), h(i, i));
            }
        }
    }
}

TEST(SnfTest, Examples)
{
    const SnfResult r = snf(IntMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(r.d, (IntMatrix{{1, 0}, {0, 6}}));
    EXPECT_TRUE(snf(IntMatrix(2, 2)).d.is_zero());
    // Z/7 x (Z/2)^3
    const SnfResult g = snf(IntMatrix::diagonal({7, 2, 2, 2}));
    EXPECT_EQ(g.d, IntMatrix::diagonal({1, 2, 2, 14}));
}

TEST(SnfTest, ChainAndDeterminant)
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        const IntMatrix m = random_matrix(rng, 4, 4, 12);
        const SnfResult r = snf(m);
        EXPECT_EQ(r.u * m * r.v, r.d);
        EXPECT_TRUE(r.d.is_diagonal());
        BigInt prod = 1;
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_GE(r.d(i, i), 0);
            if (i + 1 < 4 && r.d(i, i) != 0) EXPECT_EQ(r.d(i + 1, i + 1) % r.d(i, i), 0);
            prod *= r.d(i, i);
        }
        EXPECT_EQ(prod, abs(det_int(m)));
    }
}

TEST(DeterminantTest, Basics)
{
    EXPECT_EQ(det_int(IntMatrix::identity(5)), 1);
    EXPECT_EQ(det_int(IntMatrix::diagonal({2, 2, 2})), 8);
    EXPECT_THROW(det_int(IntMatrix(2, 3)), DimensionError);
    // trace form of Q(cbrt 2) on 1, a, a^2
    const IntMatrix tf{{3, 0, 0}, {0, 0, 6}, {0, 6, 0}};
    EXPECT_EQ(det_int(tf), cofactor_det(tf));
    EXPECT_EQ(det_int(tf), -108);
}

TEST(DeterminantTest, MultiplicativeAndMatchesCofactors)
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; ++t) {
        const IntMatrix a = random_matrix(rng, 4, 4, 9), b = random_matrix(rng, 4, 4, 9);
        EXPECT_EQ(det_int(a * b), det_int(a) * det_int(b));
        EXPECT_EQ(det_int(a), cofactor_det(a));
    }
}

TEST(PolynomialTest, ArithmeticAndDiscriminant)
{
    const IntPolynomial f{-9, -1, 0, 1};
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(discriminant(f), -2183);
    EXPECT_EQ(discriminant(IntPolynomial{1, 0, 1}), -4);
    EXPECT_EQ(discriminant(IntPolynomial{1, 1, 1}), -3);
    EXPECT_EQ(count_real_roots(f), 1);
    EXPECT_EQ(count_real_roots(IntPolynomial{-2, 0, 1}), 2);
    EXPECT_EQ(f.derivative(), (IntPolynomial{-1, 0, 3}));
    EXPECT_EQ((IntPolynomial{1, 1} * IntPolynomial{-1, 1}), (IntPolynomial{-1, 0, 1}));
    EXPECT_TRUE((IntPolynomial{1, 1} - IntPolynomial{1, 1}).is_zero());
}

TEST(PolynomialTest, FactorModPAndIrreducibility)
{
    const auto f2 = factor_mod_p(IntPolynomial{1, 0, 1}, 2);
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0].exponent, 2);
    EXPECT_EQ(factor_mod_p(IntPolynomial{1, 0, 1}, 5).size(), 2u);
    EXPECT_EQ(factor_mod_p(IntPolynomial{-9, -1, 0, 1}, 2).size(), 1u);
    EXPECT_TRUE(certify_irreducible(IntPolynomial{-9, -1, 0, 1}));
    EXPECT_FALSE(certify_irreducible(IntPolynomial{-1, 0, 1}));
    EXPECT_FALSE(certify_irreducible(IntPolynomial{4, 0, 5, 0, 1}));  // (x^2+1)(x^2+4)
    EXPECT_TRUE(dedekind_maximal_at(IntPolynomial{1, 0, 1}, 2));
    EXPECT_FALSE(dedekind_maximal_at(IntPolynomial{23, 0, 1}, 2));
}
