// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "properties.hpp"

#include "nfk/density.hpp"
#include "nfk/experiment.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/kummer.hpp"
#include "nfk/residue_ring.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace nfk;
using nfk::testing::make_field;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Criterion = std::function<Outcome()>;

NumberField cubic() { return make_field({-9, -1, 0, 1}, 2, "cubic-9"); }

Outcome rho_table()
{
    const KummerField kf(cubic(), 2);
    std::map<BigInt, BigRational> got;
    for (const auto& q : enumerate_R(kf)) got[q.norm().get_num()] = rho(kf, q);
    const std::map<BigInt, BigRational> want{{1, BigRational(1, 16)}, {64, BigRational(7, 16)}, {512, BigRational(1, 2)}};
    std::ostringstream os;
    for (const auto& [n, r] : got) os << "N=" << n << ":" << to_string(r) << " ";
    return {got == want, os.str()};
}

Outcome residue_structure()
{
    const ResidueUnitGroup g = unit_group_mod_ideal(Ideal::from_integer(cubic(), 4));
    return {g.group().divisors() == std::vector<long>{2, 2, 14}, "(O_K/4)^x = " + g.group().str()};
}

Outcome identity()
{
    const BigRational c = identity_check(cubic());
    const BigRational gi = identity_check(make_field({1, 0, 1}, 2));
    const BigRational q = identity_check(make_field({0, 1}, 2));
    return {c == BigRational(1, 2) && gi == BigRational(1, 2) && q == 1,
            "cubic " + to_string(c) + ", Q(i) " + to_string(gi) + ", Q " + to_string(q)};
}

Outcome rho_sums()
{
    bool ok = true;
    std::string detail;
    for (const auto& fc : nfk::testing::field_matrix()) {
        const NumberField k = make_field(fc);
        for (int ell : {2, 3}) {
            if (!k.contains_zeta(ell)) continue;
            const DensityReport r = density_report(KummerField(k, ell));
            ok = ok && r.total == 1;
            detail += fc.name + "/" + std::to_string(ell) + ":" + to_string(r.total) + " ";
        }
    }
    return {ok, detail};
}

Outcome quadratic_discriminants()
{
    const KummerField kf(make_field({0, 1}, 2), 2);
    long checked = 0, mismatches = 0;
    for (long a = 2; a <= 10000; ++a) {
        bool sf = true;
        for (const auto& f : factor_integer(BigInt(a))) sf = sf && f.exponent == 1;
        if (!sf) continue;
        for (long d : {a, -a}) {
            const Discriminant disc = kf.relative_discriminant(kf.normalize(kf.field().from_int(d)));
            const long want = (((d % 4) + 4) % 4 == 1) ? std::labs(d) : 4 * std::labs(d);
            ++checked;
            if (disc.norm != want || disc.delta.to_ideal() != Ideal::from_integer(kf.field(), want)) ++mismatches;
        }
    }
    // d = -1 is squarefree with |d| = 1 but outside the range; d = 1 is degenerate.
    return {mismatches == 0, std::to_string(checked) + " values, " + std::to_string(mismatches) + " mismatches"};
}

Outcome trace_forms()
{
    int bad = 0, total = 0;
    for (const auto& [poly, ell] : std::vector<std::pair<std::vector<long>, int>>{{{1, 1, 1}, 3}, {{1, 0, 1}, 2}}) {
        const NumberField k = make_field(poly, ell);
        nfk::testing::Generator gen(k, 6);
        for (int i = 0; i < 100; ++i) {
            const IntVec g = gen.element(20);
            const TraceFormCheck t = trace_form_discriminant(k, g, ell);
            const AlgebraicNumber gamma(k, g);
            const BigInt ll = pow(BigInt(ell), static_cast<unsigned long>(ell));
            const AlgebraicNumber want =
                AlgebraicNumber::from_int(k, ell == 2 ? ll : BigInt(-ll)) * gamma.pow(ell - 1);
            ++total;
            if (!(t.determinant == want && t.formula == want)) ++bad;
        }
    }
    return {bad == 0, std::to_string(total) + " determinants, " + std::to_string(bad) + " mismatches"};
}

const ExperimentReport& qm5_experiment()
{
    static const ExperimentReport r = run_equidistribution_experiment(KummerField(make_field({5, 0, 1}, 2, "Q(sqrt-5)"), 2), 20000);
    return r;
}

Outcome steinitz_identity()
{
    const ExperimentReport& r = qm5_experiment();
    return {r.total > 0 && r.steinitz_checked == r.total && r.steinitz_failures == 0,
            std::to_string(r.steinitz_checked) + " extensions, " + std::to_string(r.steinitz_failures) + " violations"};
}

Outcome equidistribution()
{
    const ExperimentReport& r = qm5_experiment();
    std::ostringstream os;
    os << std::setprecision(4) << r.total << " extensions, class fractions";
    for (auto c : r.column_totals) os << " " << static_cast<double>(c) / static_cast<double>(r.total);
    os << ", max row deviation " << r.row_deviation << ", " << r.seconds << " s";
    return {r.columns.size() == 2 && r.column_deviation <= 0.05 && r.row_deviation <= 0.07, os.str()};
}

Outcome count_asymptotic()
{
    const CountReport q = run_count_asymptotic_check(KummerField(make_field({0, 1}, 2), 2), 1000000);
    const CountReport gi = run_count_asymptotic_check(KummerField(make_field({1, 0, 1}, 2), 2), 100000);
    const double q_ratio = q.observed / (6 / (M_PI * M_PI));
    std::ostringstream os;
    os << std::setprecision(6) << "Q: " << q.count << " (ratio to 6/pi^2 " << q_ratio << "), Q(i): " << gi.count
       << " (ratio " << gi.closed_ratio << ")";
    return {std::fabs(q_ratio - 1) <= 0.02 && std::fabs(gi.closed_ratio - 1) <= 0.10, os.str()};
}

void chains(long bound, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    out.push_back(cur);
    long prod = 1;
    for (long d : cur) prod *= d;
    for (long d = cur.empty() ? 2 : cur.back(); prod * d <= bound; ++d) {
        if (!cur.empty() && d % cur.back() != 0) continue;
        cur.push_back(d);
        chains(bound, cur, out);
        cur.pop_back();
    }
}

Outcome group_lemma()
{
    std::vector<std::vector<long>> all;
    std::vector<long> cur;
    chains(24, cur, all);
    int bad = 0;
    for (const auto& d : all) {
        const FiniteAbelianGroup g(d);
        for (int n : {2, 3}) {
            std::uint64_t want = 1;
            for (int i = 1; i < n; ++i) want *= g.order();
            for (auto c : product_distribution_check(g, n))
                if (c != want) {
                    ++bad;
                    break;
                }
        }
    }
    return {bad == 0, std::to_string(all.size()) + " groups, n in {2,3}, " + std::to_string(bad) + " failures"};
}

Outcome multiplicity()
{
    const KummerField kf(make_field({1, 1, 1}, 3), 3);
    std::map<TupleKey, int> mult;
    for (const auto& r : kf.collect(1000, {false})) ++mult[r.orbit_key];
    bool ok = !mult.empty();
    for (const auto& [k, m] : mult) ok = ok && m == 2;
    std::map<TupleKey, int> once;
    for (const auto& r : kf.collect(1000)) ++once[r.orbit_key];
    for (const auto& [k, m] : once) ok = ok && m == 1;
    ok = ok && once.size() == mult.size();
    return {ok, std::to_string(mult.size()) + " classes, " + std::to_string(2 * mult.size()) + " without dedup"};
}

Outcome properties()
{
    int cases = 0, failures = 0;
    std::string first;
    for (const auto& fc : nfk::testing::field_matrix()) {
        const NumberField k = make_field(fc);
        for (const auto& r : {nfk::testing::norm_multiplicativity(k, 100), nfk::testing::factor_reconstruct(k, 100),
                              nfk::testing::parts_reconstruct(k, fc.ell, 100),
                              nfk::testing::sqrt_square_roundtrip(k, 100)}) {
            cases += r.cases;
            if (r.failures && first.empty()) first = fc.name + ": " + r.first_failure;
            failures += r.failures;
        }
    }
    return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures" +
                               (first.empty() ? "" : " (" + first + ")")};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"rho table of the cubic field", rho_table},
        {"(O_K/4)^x of the cubic field", residue_structure},
        {"density identity", identity},
        {"sum of rho is 1", rho_sums},
        {"quadratic discriminants over Q", quadratic_discriminants},
        {"trace-form determinants", trace_forms},
        {"Steinitz ideal identity", steinitz_identity},
        {"Steinitz class equidistribution over Q(sqrt-5)", equidistribution},
        {"extension counts against the analytic constant", count_asymptotic},
        {"product distribution over abelian groups", group_lemma},
        {"enumeration multiplicity over Q(zeta3)", multiplicity},
        {"ideal arithmetic properties", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << criteria[i].first << ": "
                  << o.detail << std::fixed << std::setprecision(2) << " [" << secs << " s]" << std::defaultfloat
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
