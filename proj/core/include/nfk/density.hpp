#pragma once

#include "nfk/class_group.hpp"
#include "nfk/ideal.hpp"
#include "nfk/kummer.hpp"

#include <string>
#include <vector>

namespace nfk {

/// Primes above ell split by whether the candidate ell-part has the maximal exponent.
struct RamificationProfile {
    int ell = 0;
    std::vector<PrimeIdeal> maximal;     // W
    std::vector<PrimeIdeal> congruence;  // W'
    std::vector<int> depth;              // per W' prime: required depth s (top depth when the exponent is 0)
    std::vector<int> top_depth;          // per W' prime: ell e / (ell - 1)
    FactoredIdeal modulus;               // prod over W' of q^{top depth}
};

RamificationProfile build_ramification_sets(const KummerField& kf, const FactoredIdeal& ell_part);
/// All products of admissible exponents over the primes above ell, by norm.
std::vector<FactoredIdeal> enumerate_R(const KummerField& kf);
BigRational rho(const KummerField& kf, const FactoredIdeal& ell_part);

struct DensityRow {
    FactoredIdeal ideal;
    BigInt norm;
    BigRational rho;
};
struct DensityReport {
    std::string field;
    int ell = 0;
    std::vector<DensityRow> rows;
    BigRational total;  // sum of rho
    std::optional<BigRational> identity;           // ell = 2 only
    std::optional<BigRational> identity_expected;  // 1 / 2^{r2}
};
DensityReport density_report(const KummerField& kf);

/// (2^{r1+r2} #Z) prod_{q | 2} N(q)/(1+N(q)) sum_R rho/N, for ell = 2.
BigRational identity_check(const KummerField& kf);
BigRational identity_check(const NumberField& field);

struct SquarefreeCensus {
    std::uint64_t count = 0;
    long double predicted = 0;
    long double ratio = 0;
};
/// ell-power-free ideals of norm <= bound in class c, coprime to `coprime_to`,
/// against Res zeta_K / (zeta_K(ell) h) prod_q (1 - (N^{ell-1} - 1)/(N^ell - 1)) X.
SquarefreeCensus count_squarefree_ideals_in_class(const NumberField& field, const ClassGroup::Element& c,
                                                  const Ideal& coprime_to, std::uint64_t bound, int ell = 2);

struct EquidistributionReport {
    std::vector<std::uint64_t> cells;  // by index in H
    std::uint64_t total = 0;
    long double max_deviation = 0;     // max |#H cell/total - 1|
};
/// Canonical generators of principal ideals a * b, b ell-power-free and coprime to
/// a and the modulus, N <= bound, times torsion and the free units mod ell-th
/// powers, tallied in (O_K/modulus)^x / ell-th powers.
EquidistributionReport generator_equidistribution_test(const NumberField& field, const Ideal& modulus,
                                                       const Ideal& ideal_factor, std::uint64_t bound, int ell = 2);

}  // namespace nfk
