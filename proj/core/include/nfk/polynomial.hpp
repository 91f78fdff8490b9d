#pragma once

#include "nfk/bigint.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nfk {

/// Integer polynomial, coefficients in ascending degree; no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt coeff(int i) const;
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt eval(const BigInt& x) const;
    BigRational eval(const BigRational& x) const;
    IntPolynomial derivative() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Exact discriminant via the Sylvester resultant of f and f'.
BigInt discriminant(const IntPolynomial& f);

/// Number of distinct real roots (Sturm's theorem, exact rational arithmetic).
int count_real_roots(const IntPolynomial& f);

// ---- polynomials over F_p (p < 2^63), coefficients ascending, trimmed ----

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

ModPoly reduce_mod_p(const IntPolynomial& f, std::uint64_t p);
IntPolynomial lift(const ModPoly& f);
ModPoly modpoly_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
/// Returns quotient; remainder written to rem.
ModPoly modpoly_divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly& rem);
ModPoly modpoly_gcd(ModPoly a, ModPoly b, std::uint64_t p);

struct ModFactor {
    ModPoly factor;  // monic irreducible
    int exponent;
};
/// Complete factorization over F_p of a nonzero polynomial (made monic).
/// Factors sorted by degree then coefficient vector.
std::vector<ModFactor> factor_mod_p(const IntPolynomial& f, std::uint64_t p);

/// Irreducibility over Q for monic f: no rational root, and either f is
/// irreducible modulo some good prime or the factor-degree patterns over
/// good primes below prime_bound rule out every proper factor degree.
bool certify_irreducible(const IntPolynomial& f, std::uint64_t prime_bound = 1000);

/// Dedekind criterion: is Z[x]/(f) maximal at p?
bool dedekind_maximal_at(const IntPolynomial& f, std::uint64_t p);

}  // namespace nfk
