#pragma once

#include "nfk/number_field.hpp"

#include <optional>

namespace nfk {

/// Riemann zeta for real s > 1 (Euler-Maclaurin, about 1e-18 relative).
long double riemann_zeta(long double s);

struct ZetaValue {
    long double value = 0;
    long double error = 0;  // absolute bound on the truncation error
};

struct ZetaConstants {
    long double residue = 0;  // Res_{s=1} zeta_K, exact up to rounding
    ZetaValue at_two;
    std::optional<ZetaValue> at_ell;
    std::uint64_t prime_bound = 0;
};

/// Euler product over rational primes up to prime_bound, completed by the
/// Riemann zeta tail; the residue comes from the class number formula.
ZetaValue dedekind_zeta(const NumberField& field, long double s, std::uint64_t prime_bound = 100000);
ZetaConstants zeta_constants(const NumberField& field, int ell = 0, std::uint64_t prime_bound = 100000);
/// Throws InvalidInput naming the achievable precision when `tolerance` cannot be met.
ZetaConstants zeta_constants(const NumberField& field, int ell, long double tolerance, std::uint64_t prime_bound);

/// 2^{r1} (2 pi)^{r2} h R / (w sqrt|d|).
long double zeta_residue(const NumberField& field);

}  // namespace nfk
