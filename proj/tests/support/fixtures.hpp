#pragma once

#include "nfk/ideal.hpp"
#include "nfk/number_field.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace nfk::testing {

/// The fields every suite runs against.
struct FieldCase {
    std::string name;
    std::vector<long> poly;
    int ell;
};

inline const std::vector<FieldCase>& field_matrix()
{
    static const std::vector<FieldCase> fields{
        {"Q", {0, 1}, 2},          {"Q(i)", {1, 0, 1}, 2},          {"Q(sqrt-5)", {5, 0, 1}, 2},
        {"Q(zeta3)", {1, 1, 1}, 3}, {"cubic-9", {-9, -1, 0, 1}, 2},
    };
    return fields;
}

inline NumberField make_field(const std::vector<long>& poly, int ell = 0, const std::string& label = {})
{
    std::vector<BigInt> c(poly.begin(), poly.end());
    return NumberField(IntPolynomial(c), ell, label);
}

inline NumberField make_field(const FieldCase& f) { return make_field(f.poly, f.ell, f.name); }

/// Fixed-seed source of random elements and ideals.
class Generator {
public:
    explicit Generator(const NumberField& field, std::uint64_t seed = 0x5eed) : field_(field), rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    IntVec element(long height = 12)
    {
        IntVec a(field_.dim());
        do {
            for (auto& c : a) c = integer(-height, height);
        } while (field_.is_zero(a));
        return a;
    }

    /// Product of small primes with exponents 0..max_exp (at least one nontrivial factor
    /// unless allow_unit).
    FactoredIdeal factored(int max_exp = 3, bool allow_unit = true)
    {
        static constexpr int norm_bound = 60;
        if (primes_.empty()) primes_ = primes_up_to_norm(field_, norm_bound);
        FactoredIdeal out(field_);
        do {
            out = FactoredIdeal(field_);
            const int k = static_cast<int>(integer(1, 3));
            for (int i = 0; i < k; ++i) {
                const auto& q = primes_[static_cast<std::size_t>(integer(0, static_cast<long>(primes_.size()) - 1))];
                out.multiply_by(q, static_cast<int>(integer(allow_unit ? 0 : 1, max_exp)));
            }
        } while (!allow_unit && out.is_one());
        return out;
    }

    /// Ideal generated by two random elements (often non-principal).
    Ideal two_element()
    {
        for (;;) {
            const Ideal a = Ideal::from_generators(field_, {element(8), element(8)});
            if (a.norm() <= 100000) return a;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    NumberField field_;
    std::mt19937_64 rng_;
    std::vector<PrimeIdeal> primes_;
};

}  // namespace nfk::testing

namespace nfk {
inline void PrintTo(const IntMatrix& m, std::ostream* os) { *os << m.str(); }
}  // namespace nfk
