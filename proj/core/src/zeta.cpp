#include "nfk/zeta.hpp"
#include "nfk/class_group.hpp"
#include "nfk/ideal.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/unit_group.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace nfk {

long double riemann_zeta(long double s)
{
    if (s <= 1) throw InvalidInput("zeta(s) needs s > 1");
    constexpr int terms = 30;
    long double sum = 0;
    for (int m = 1; m < terms; ++m) sum += std::pow(static_cast<long double>(m), -s);
    const long double n = terms;
    sum += std::pow(n, 1 - s) / (s - 1) + std::pow(n, -s) / 2;
    // B_2k / (2k)!
    static constexpr long double bernoulli[] = {1.0L / 12, -1.0L / 720, 1.0L / 30240, -1.0L / 1209600,
                                                1.0L / 47900160, -691.0L / 1307674368000.0L,
                                                1.0L / 74724249600.0L};
    long double rising = s;             // s (s+1) ... (s+2k-2)
    long double power = std::pow(n, -s - 1);
    for (int k = 0; k < 7; ++k) {
        sum += bernoulli[k] * rising * power;
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
        power /= n * n;
    }
    return sum;
}

long double zeta_residue(const NumberField& field)
{
    const long double h = static_cast<long double>(class_group(field).h());
    const UnitGroup& u = unit_group(field);
    const long double disc = std::fabs(to_long_double(field.discriminant()));
    return std::pow(2.0L, field.r1()) * std::pow(2 * std::numbers::pi_v<long double>, field.r2()) * h *
           u.regulator() / (static_cast<long double>(u.torsion_order()) * std::sqrt(disc));
}

ZetaValue dedekind_zeta(const NumberField& field, long double s, std::uint64_t prime_bound)
{
    if (s <= 1) throw InvalidInput("zeta_K(s) needs s > 1");
    long double log_value = 0;
    long double log_rational = 0;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        const long double lp = std::log(static_cast<long double>(p));
        for (const auto& q : primes_above(field, from_uint64(p)))
            log_value -= std::log1p(-std::exp(-s * lp * q.f()));
        log_rational -= std::log1p(-std::exp(-s * lp));
    }
    // primes beyond the bound: the Riemann tail, exact for Q; for n > 1 the
    // remaining L-factors contribute at most (n-1) B^{1-s}/(s-1) to the log.
    const long double tail = std::log(riemann_zeta(s)) - log_rational;
    const long double value = std::exp(log_value + tail);
    const int n = field.degree();
    const long double b = static_cast<long double>(prime_bound);
    const long double log_err = (n - 1) * std::pow(b, 1 - s) / (s - 1);
    const long double rounding = 1e-15L * value;
    return {value, value * std::expm1(log_err) + rounding};
}

ZetaConstants zeta_constants(const NumberField& field, int ell, std::uint64_t prime_bound)
{
    ZetaConstants c;
    c.residue = zeta_residue(field);
    c.at_two = dedekind_zeta(field, 2, prime_bound);
    if (ell >= 2) c.at_ell = dedekind_zeta(field, ell, prime_bound);
    c.prime_bound = prime_bound;
    return c;
}

ZetaConstants zeta_constants(const NumberField& field, int ell, long double tolerance, std::uint64_t prime_bound)
{
    ZetaConstants c = zeta_constants(field, ell, prime_bound);
    long double worst = c.at_two.error;
    if (c.at_ell) worst = std::max(worst, c.at_ell->error);
    if (worst > tolerance) {
        std::ostringstream msg;
        msg << "requested precision " << static_cast<double>(tolerance) << " is out of reach with primes up to "
            << prime_bound << "; achievable: " << static_cast<double>(worst);
        throw InvalidInput(msg.str());
    }
    return c;
}

}  // namespace nfk
