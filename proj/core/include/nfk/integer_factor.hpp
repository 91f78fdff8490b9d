#pragma once

#include "nfk/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nfk {

struct PrimePower {
    BigInt prime;
    int exponent;
};

/// Factorization of |n| (n != 0) into ascending primes.
std::vector<PrimePower> factor_integer(const BigInt& n);

bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Integer k-th root when n is an exact k-th power.
bool exact_root(const BigInt& n, unsigned k, BigInt& root);
/// floor(n^{1/k}) for n >= 0.
BigInt root_floor(const BigInt& n, unsigned k);

}  // namespace nfk
