#pragma once

#include "nfk/density.hpp"
#include "nfk/kummer.hpp"

#include <string>
#include <vector>

namespace nfk {

/// Extensions with N(Delta) <= bound tallied by ell-part (rows) and Steinitz class (columns).
struct ExperimentReport {
    std::string field;
    int ell = 0;
    BigInt bound;
    std::vector<FactoredIdeal> rows;                 // R in norm order
    std::vector<BigInt> row_norms;
    std::vector<std::string> columns;                // class labels by index
    std::vector<bool> realizable;                    // by class index
    std::vector<std::vector<std::uint64_t>> counts;  // [row][class]
    std::vector<std::uint64_t> row_totals;
    std::vector<std::uint64_t> column_totals;
    std::uint64_t total = 0;
    std::uint64_t steinitz_checked = 0;
    std::uint64_t steinitz_failures = 0;
    /// max over realizable classes of |column/total - 1/#realizable|
    double column_deviation = 0;
    /// same inside each nonempty row
    double row_deviation = 0;
    double seconds = 0;
};

/// St^2 (Q N^ell prod i_k^{k-1})^{ell-1} = ell-part of the discriminant, as fractional ideals.
bool steinitz_identity_holds(const ExtensionRecord& rec);

ExperimentReport run_equidistribution_experiment(const KummerField& kf, const BigInt& bound);

/// #E(X)/X against Res/(2^{r2} zeta_K(2)) and against the product form
/// Res/zeta_K(2) * 2^{r1+r2} #Z prod N(q)/(1+N(q)) sum rho/N.
struct CountReport {
    std::string field;
    BigInt bound;
    std::uint64_t count = 0;
    double observed = 0;         // count / X
    double closed_constant = 0;  // Res / (2^{r2} zeta_K(2))
    double product_constant = 0;
    double closed_ratio = 0;
    double product_ratio = 0;
    BigRational identity;           // the product-form prefactor, exact
    BigRational identity_expected;  // 1 / 2^{r2}
    double seconds = 0;
};

CountReport run_count_asymptotic_check(const KummerField& kf, const BigInt& bound);

}  // namespace nfk
