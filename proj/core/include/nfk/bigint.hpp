#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nfk {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

BigRational parse_rational(std::string_view text);

/// Floor division with a positive or negative divisor.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

/// Extended gcd: u*a + v*b = g >= 0.
BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v);

BigInt pow(const BigInt& base, unsigned long exp);
BigRational pow(const BigRational& base, long exp);

/// Throws if the value does not fit.
std::int64_t to_int64(const BigInt& z);
std::uint64_t to_uint64(const BigInt& z);
BigInt from_uint64(std::uint64_t v);

}  // namespace nfk
