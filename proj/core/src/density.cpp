#include "nfk/density.hpp"
#include "nfk/residue_ring.hpp"
#include "nfk/unit_group.hpp"
#include "nfk/zeta.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nfk {

namespace {

BigRational rational_pow(const BigRational& x, std::size_t k)
{
    BigRational r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= x;
    return r;
}

// Walk all ell-power-free ideals built from `primes` with norm <= bound.
void walk_power_free(const std::vector<PrimeIdeal>& primes, const std::vector<std::uint64_t>& norms, int ell,
                     std::uint64_t bound,
                     const std::function<void(const std::vector<std::pair<std::size_t, int>>&, std::uint64_t)>& visit)
{
    std::vector<std::pair<std::size_t, int>> stack;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t norm) {
        visit(stack, norm);
        for (std::size_t i = start; i < primes.size(); ++i) {
            if (norms[i] > bound / norm) break;
            std::uint64_t n = norm;
            for (int e = 1; e < ell && norms[i] <= bound / n; ++e) {
                n *= norms[i];
                stack.emplace_back(i, e);
                rec(i + 1, n);
                stack.pop_back();
            }
        }
    };
    rec(0, 1);
}

}  // namespace

RamificationProfile build_ramification_sets(const KummerField& kf, const FactoredIdeal& ell_part)
{
    const int ell = kf.ell();
    const BigInt l(ell);
    for (const auto& [q, e] : ell_part.terms())
        if (!q.divides_integer(l) || e < 0) throw InvalidInput("not in R: " + ell_part.str());
    RamificationProfile p{ell, {}, {}, {}, {}, FactoredIdeal(kf.field())};
    for (const auto& q : kf.ell_primes()) {
        const int x = ell_part.exponent(q);
        const int top = ell * q.e() / (ell - 1);
        if (x == (ell - 1) + ell * q.e()) {
            p.maximal.push_back(q);
            continue;
        }
        int s = top;
        if (x != 0) {
            if (x % (ell - 1) != 0) throw InvalidInput("not in R: " + ell_part.str());
            s = top + 1 - x / (ell - 1);
            if (s < 1 || s >= top) throw InvalidInput("not in R: " + ell_part.str());
        }
        p.congruence.push_back(q);
        p.depth.push_back(s);
        p.top_depth.push_back(top);
        p.modulus.multiply_by(q, top);
    }
    return p;
}

std::vector<FactoredIdeal> enumerate_R(const KummerField& kf)
{
    std::vector<FactoredIdeal> out{FactoredIdeal(kf.field())};
    for (std::size_t i = 0; i < kf.ell_primes().size(); ++i) {
        std::vector<FactoredIdeal> next;
        for (const auto& a : out)
            for (int x : kf.admissible_exponents(i)) {
                FactoredIdeal b = a;
                b.multiply_by(kf.ell_primes()[i], x);
                next.push_back(std::move(b));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const FactoredIdeal& a, const FactoredIdeal& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        return a < b;
    });
    return out;
}

BigRational rho(const KummerField& kf, const FactoredIdeal& ell_part)
{
    const RamificationProfile p = build_ramification_sets(kf, ell_part);
    const int ell = kf.ell();
    BigRational r = rational_pow(BigRational(ell - 1, ell), p.maximal.size());
    r *= rational_pow(BigRational(1, ell), p.congruence.size());
    r.canonicalize();
    if (p.congruence.empty()) return r;

    std::vector<Ideal> at_depth, past_depth;
    for (std::size_t j = 0; j < p.congruence.size(); ++j) {
        const Ideal& q = p.congruence[j].ideal();
        at_depth.push_back(ideal_pow(q, static_cast<unsigned>(p.depth[j])));
        past_depth.push_back(p.depth[j] < p.top_depth[j] ? ideal_pow(q, static_cast<unsigned>(p.depth[j] + 1)) : q);
    }
    const ResidueRing ring(p.modulus.to_ideal());
    std::uint64_t units = 0, hits = 0;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        const ResidueRing::Residue x = ring.residue(i);
        if (!ring.is_unit(x)) continue;
        ++units;
        const IntVec a = ring.lift(x);
        bool ok = true;
        for (std::size_t j = 0; j < p.congruence.size() && ok; ++j) {
            ok = is_power_class(a, at_depth[j], ell);
            if (ok && p.depth[j] < p.top_depth[j]) ok = !is_power_class(a, past_depth[j], ell);
        }
        if (ok) ++hits;
    }
    r *= BigRational(from_uint64(hits), from_uint64(units));
    r.canonicalize();
    return r;
}

DensityReport density_report(const KummerField& kf)
{
    DensityReport d;
    d.field = kf.field().label();
    d.ell = kf.ell();
    d.total = 0;
    for (const auto& q : enumerate_R(kf)) {
        DensityRow row{q, q.norm().get_num(), rho(kf, q)};
        d.total += row.rho;
        d.rows.push_back(std::move(row));
    }
    d.total.canonicalize();
    if (kf.ell() == 2) {
        d.identity = identity_check(kf);
        d.identity_expected = BigRational(1, 1) / nfk::pow(BigRational(2), kf.field().r2());
        d.identity_expected->canonicalize();
    }
    return d;
}

BigRational identity_check(const KummerField& kf)
{
    if (kf.ell() != 2) throw InvalidInput("identity_check is stated for ell = 2");
    const NumberField& k = kf.field();
    BigRational lhs = nfk::pow(BigRational(2), k.r1() + k.r2());
    lhs *= nfk::pow(BigRational(2), static_cast<int>(kf.ell_primes().size()));  // #Z
    for (const auto& q : kf.ell_primes()) lhs *= BigRational(q.norm(), q.norm() + 1);
    BigRational sum = 0;
    for (const auto& q : enumerate_R(kf)) sum += rho(kf, q) / q.norm();
    lhs *= sum;
    lhs.canonicalize();
    return lhs;
}

BigRational identity_check(const NumberField& field) { return identity_check(KummerField(field, 2)); }

SquarefreeCensus count_squarefree_ideals_in_class(const NumberField& field, const ClassGroup::Element& c,
                                                  const Ideal& coprime_to, std::uint64_t bound, int ell)
{
    field.require_same(coprime_to.field());
    if (bound > Ceilings::defaults().census_norm) throw CeilingExceeded("squarefree census", Ceilings::defaults().census_norm);
    const ClassGroup& cg = class_group(field);
    const FiniteAbelianGroup& g = cg.group();
    const ClassGroup::Element target = g.reduce(c);
    const FactoredIdeal excluded = factor_ideal(coprime_to);

    std::vector<PrimeIdeal> primes;
    std::vector<std::uint64_t> norms;
    std::vector<ClassGroup::Element> classes;
    for (const auto& q : primes_up_to_norm(field, from_uint64(bound))) {
        if (excluded.exponent(q) != 0) continue;
        primes.push_back(q);
        norms.push_back(to_uint64(q.norm()));
        classes.push_back(cg.class_of(q));
    }
    SquarefreeCensus out;
    walk_power_free(primes, norms, ell, bound, [&](const auto& stack, std::uint64_t) {
        ClassGroup::Element x = g.identity();
        for (const auto& [i, e] : stack) x = g.add(x, g.scale(classes[i], e));
        if (x == target) ++out.count;
    });
    long double factor = 1;
    for (const auto& [q, e] : excluded.terms()) {
        const long double n = to_long_double(q.norm());
        factor *= 1 - (std::pow(n, ell - 1) - 1) / (std::pow(n, ell) - 1);
    }
    out.predicted = zeta_residue(field) / (dedekind_zeta(field, ell).value * static_cast<long double>(cg.h())) *
                    factor * static_cast<long double>(bound);
    out.ratio = static_cast<long double>(out.count) / out.predicted;
    return out;
}

EquidistributionReport generator_equidistribution_test(const NumberField& field, const Ideal& modulus,
                                                       const Ideal& ideal_factor, std::uint64_t bound, int ell)
{
    field.require_same(modulus.field());
    if (!ideal_gcd(modulus, ideal_factor).is_unit()) throw InvalidInput("ideal factor must be coprime to the modulus");
    const ClassGroup& cg = class_group(field);
    const FiniteAbelianGroup& cl = cg.group();
    const UnitGroup& units = unit_group(field);

    std::optional<ResidueUnitGroup> g;
    std::optional<PowerQuotient> h;
    if (!modulus.is_unit()) {
        g.emplace(modulus);
        h.emplace(g->group(), ell);
    }
    EquidistributionReport rep;
    rep.cells.assign(h ? h->group().order() : 1, 0);

    std::vector<IntVec> multipliers;
    for (int t = 0; t < units.torsion_order(); ++t) {
        std::vector<UnitGroup::Coordinates> cs{{t, std::vector<long>(units.fundamental_units().size(), 0)}};
        for (std::size_t j = 0; j < units.fundamental_units().size(); ++j) {
            std::vector<UnitGroup::Coordinates> next;
            for (const auto& c : cs)
                for (int b = 0; b < ell; ++b) {
                    auto d = c;
                    d.exponents[j] = b;
                    next.push_back(d);
                }
            cs = std::move(next);
        }
        for (const auto& c : cs) multipliers.push_back(units.element(c));
    }

    const FactoredIdeal excluded = factor_ideal(modulus * ideal_factor);
    const ClassGroup::Element wanted = cl.neg(cg.class_of(ideal_factor));
    const std::uint64_t base = to_uint64(ideal_factor.norm());
    if (base > bound) return rep;
    std::vector<PrimeIdeal> primes;
    std::vector<std::uint64_t> norms;
    std::vector<ClassGroup::Element> classes;
    for (const auto& q : primes_up_to_norm(field, from_uint64(bound / base))) {
        if (excluded.exponent(q) != 0) continue;
        primes.push_back(q);
        norms.push_back(to_uint64(q.norm()));
        classes.push_back(cg.class_of(q));
    }
    walk_power_free(primes, norms, ell, bound / base, [&](const auto& stack, std::uint64_t) {
        ClassGroup::Element x = cl.identity();
        FactoredIdeal b(field);
        for (const auto& [i, e] : stack) {
            x = cl.add(x, cl.scale(classes[i], e));
            b.multiply_by(primes[i], e);
        }
        if (!(x == wanted)) return;
        const IntVec a = canonical_generator(ideal_factor * b.to_ideal());
        for (const auto& u : multipliers) {
            std::size_t cell = 0;
            if (h) cell = h->group().index(h->project(g->dlog(field.mul(a, u))));
            ++rep.cells[cell];
            ++rep.total;
        }
    });
    if (rep.total > 0) {
        const long double cells = static_cast<long double>(rep.cells.size());
        for (std::uint64_t c : rep.cells)
            rep.max_deviation = std::max(rep.max_deviation,
                                         std::fabs(cells * static_cast<long double>(c) / static_cast<long double>(rep.total) - 1));
    }
    return rep;
}

}  // namespace nfk
