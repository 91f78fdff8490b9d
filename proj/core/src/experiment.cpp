#include "nfk/experiment.hpp"
#include "nfk/zeta.hpp"

#include <chrono>
#include <cmath>
#include <map>

namespace nfk {

namespace {

double elapsed(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool steinitz_identity_holds(const ExtensionRecord& rec)
{
    // Recomputed with HNF products rather than exponent vectors.
    const PartsDecomposition& p = rec.datum.parts;
    const int ell = rec.datum.ell;
    FractionalIdeal den = FractionalIdeal::from_factored(p.ell_part * p.power_root.pow(ell));
    for (int i = 2; i < ell; ++i)
        den = den * FractionalIdeal::from_factored(p.power_parts[static_cast<std::size_t>(i)].pow(i - 1));
    FractionalIdeal lhs = FractionalIdeal::from_factored(rec.steinitz.ideal);
    lhs = lhs * lhs;
    for (int i = 0; i < ell - 1; ++i) lhs = lhs * den;
    return lhs == FractionalIdeal::from_factored(rec.discriminant.ell_part);
}

ExperimentReport run_equidistribution_experiment(const KummerField& kf, const BigInt& bound)
{
    const auto start = std::chrono::steady_clock::now();
    const FiniteAbelianGroup& cl = kf.classes().group();
    ExperimentReport r;
    r.field = kf.field().label();
    r.ell = kf.ell();
    r.bound = bound;
    r.rows = enumerate_R(kf);
    std::map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        row_of.emplace(r.rows[i].str(), i);
        r.row_norms.push_back(r.rows[i].norm().get_num());
    }
    for (const auto& c : cl.elements()) {
        std::string label = "(";
        for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + std::to_string(c[i]);
        r.columns.push_back(label + ")");
    }
    r.realizable = kf.realizable_classes();
    r.counts.assign(r.rows.size(), std::vector<std::uint64_t>(r.columns.size(), 0));

    kf.enumerate(bound, [&](const ExtensionRecord& rec) {
        const auto it = row_of.find(rec.discriminant.ell_part.str());
        if (it == row_of.end()) throw InvariantViolation("discriminant ell-part outside R: " + rec.discriminant.ell_part.str());
        ++r.counts[it->second][cl.index(rec.steinitz.cls)];
        ++r.steinitz_checked;
        if (!steinitz_identity_holds(rec)) ++r.steinitz_failures;
    });

    r.row_totals.assign(r.rows.size(), 0);
    r.column_totals.assign(r.columns.size(), 0);
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (std::size_t j = 0; j < r.columns.size(); ++j) {
            r.row_totals[i] += r.counts[i][j];
            r.column_totals[j] += r.counts[i][j];
            r.total += r.counts[i][j];
        }
    std::size_t realizable = 0;
    for (bool b : r.realizable) realizable += b ? 1 : 0;
    const double expected = 1.0 / static_cast<double>(realizable);
    auto deviation = [&](const std::vector<std::uint64_t>& cells, std::uint64_t total) {
        double d = 0;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const double f = static_cast<double>(cells[j]) / static_cast<double>(total);
            d = std::max(d, std::fabs(f - (r.realizable[j] ? expected : 0.0)));
        }
        return d;
    };
    if (r.total > 0) r.column_deviation = deviation(r.column_totals, r.total);
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (r.row_totals[i] > 0) r.row_deviation = std::max(r.row_deviation, deviation(r.counts[i], r.row_totals[i]));
    r.seconds = elapsed(start);
    return r;
}

CountReport run_count_asymptotic_check(const KummerField& kf, const BigInt& bound)
{
    if (kf.ell() != 2) throw InvalidInput("the count check is stated for ell = 2");
    const auto start = std::chrono::steady_clock::now();
    const NumberField& k = kf.field();
    CountReport c;
    c.field = k.label();
    c.bound = bound;
    kf.enumerate(bound, [&](const ExtensionRecord&) { ++c.count; });
    const ZetaConstants z = zeta_constants(k, 2);
    const double x = bound.get_d();
    c.observed = static_cast<double>(c.count) / x;
    c.closed_constant = static_cast<double>(z.residue / (std::pow(2.0L, k.r2()) * z.at_two.value));
    BigRational local = nfk::pow(BigRational(2), k.r1() + k.r2() + static_cast<int>(kf.ell_primes().size()));
    for (const auto& q : kf.ell_primes()) local *= BigRational(q.norm(), q.norm() + 1);
    BigRational sum = 0;
    for (const auto& q : enumerate_R(kf)) sum += rho(kf, q) / q.norm();
    local *= sum;
    local.canonicalize();
    c.identity = local;
    c.identity_expected = BigRational(1) / nfk::pow(BigRational(2), k.r2());
    c.identity_expected.canonicalize();
    c.product_constant = static_cast<double>(z.residue / z.at_two.value) * local.get_d();
    c.closed_ratio = c.observed / c.closed_constant;
    c.product_ratio = c.observed / c.product_constant;
    c.seconds = elapsed(start);
    return c;
}

}  // namespace nfk
