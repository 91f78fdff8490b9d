#include "nfk/unit_group.hpp"
#include "nfk/lattice.hpp"
#include "field_caches.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace nfk {

namespace {

std::vector<long double> raw_logs(const NumberField& field, const IntVec& u) { return field.log_abs(u); }

long double inf_norm(const std::vector<long double>& v)
{
    long double m = 0;
    for (long double x : v) m = std::max(m, std::fabs(x));
    return m;
}

IntVec unit_inverse(const NumberField& field, const IntVec& u)
{
    AlgebraicNumber inv = AlgebraicNumber(field, u).inverse();
    if (!inv.is_integral()) throw InvalidInput("element is not a unit");
    return inv.numerator();
}

struct Torsion {
    IntVec generator;
    int order;
};

Torsion find_torsion(const NumberField& field)
{
    if (field.r1() > 0) return {field.from_int(-1), 2};
    const int n = field.degree();
    const IntVec one = field.one();
    std::vector<std::pair<IntVec, int>> roots;
    ShortElementEnumerator search(field, IntMatrix::identity(field.dim()));
    search.enumerate(
        static_cast<long double>(n) + 0.5L,
        [&](const IntVec& x, long double) {
            IntVec p = x;
            for (int k = 1; k <= 4 * n * n + 2; ++k) {
                if (p == one) {
                    roots.emplace_back(x, k);
                    break;
                }
                p = field.mul(p, x);
            }
            return true;
        },
        Ceilings::defaults().lattice_points, false);
    const int w = static_cast<int>(roots.size());
    Torsion best{field.from_int(-1), 2};
    bool found = false;
    for (const auto& [x, k] : roots) {
        if (k != w) continue;
        if (!found || x > best.generator) best = {x, w};
        found = true;
    }
    if (!found) throw InvariantViolation("roots of unity do not form a cyclic group");
    return best;
}

// A unit normalized so that its first nonzero log is positive and, for real
// first places, sigma_1 > 0.
IntVec normalize_unit(const NumberField& field, IntVec u, const std::vector<IntVec>& torsion)
{
    std::vector<long double> l = raw_logs(field, u);
    for (long double x : l) {
        if (std::fabs(x) < 1e-9L) continue;
        if (x < 0) u = unit_inverse(field, u);
        break;
    }
    IntVec best = u;
    bool set = false;
    for (const auto& z : torsion) {
        IntVec c = field.mul(z, u);
        if (field.r1() > 0) {
            if (field.embed(c)[0].real() > 0) return c;
            continue;
        }
        if (!set || c > best) best = c;
        set = true;
    }
    return best;
}

std::vector<IntVec> torsion_elements(const NumberField& field, const IntVec& zeta, int w)
{
    std::vector<IntVec> out;
    IntVec p = field.one();
    for (int k = 0; k < w; ++k) {
        out.push_back(p);
        p = field.mul(p, zeta);
    }
    return out;
}

long double det2(const std::vector<long double>& a, const std::vector<long double>& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

}  // namespace

UnitGroup::UnitGroup(NumberField field, IntVec torsion_generator, int torsion_order, std::vector<IntVec> fundamental,
                     bool certified)
    : field_(std::move(field)), zeta_(std::move(torsion_generator)), w_(torsion_order), units_(std::move(fundamental)),
      certified_(certified)
{
    if (rank() != field_.unit_rank()) throw InvalidInput("wrong number of fundamental units");
    const std::size_t places = static_cast<std::size_t>(field_.r1() + field_.r2());
    slack_ = 0;
    for (const auto& u : units_) {
        if (abs(field_.norm(u)) != 1) throw InvalidInput("supplied element is not a unit");
        std::vector<long double> raw = raw_logs(field_, u);
        slack_ += inf_norm(raw) / 2;
        std::vector<long double> weighted(places);
        for (std::size_t k = 0; k < places; ++k) weighted[k] = (k < static_cast<std::size_t>(field_.r1()) ? 1 : 2) * raw[k];
        logs_.push_back(std::move(weighted));
        inverses_.push_back(unit_inverse(field_, u));
    }
    const std::size_t r = units_.size();
    if (r == 0) {
        regulator_ = 1;
    } else if (r == 1) {
        regulator_ = std::fabs(logs_[0][0]);
    } else if (r == 2) {
        regulator_ = std::fabs(det2(logs_[0], logs_[1]));
    } else {
        throw Unsupported("unit rank above 2 is not supported");
    }
    if (r > 0 && regulator_ < 1e-9L) throw InvalidInput("units are not independent");
}

bool UnitGroup::is_unit(const IntVec& a) const { return abs(field_.norm(a)) == 1; }

UnitGroup::Coordinates UnitGroup::coordinates(const IntVec& a) const
{
    if (!is_unit(a)) throw InvalidInput("element is not a unit");
    Coordinates c;
    const std::size_t r = units_.size();
    c.exponents.assign(r, 0);
    if (r > 0) {
        std::vector<long double> raw = raw_logs(field_, a);
        std::vector<long double> target(r);
        for (std::size_t k = 0; k < r; ++k)
            target[k] = (k < static_cast<std::size_t>(field_.r1()) ? 1 : 2) * raw[k];
        if (r == 1) {
            c.exponents[0] = std::lround(static_cast<double>(target[0] / logs_[0][0]));
        } else {
            const long double d = det2(logs_[0], logs_[1]);
            const long double x = (target[0] * logs_[1][1] - target[1] * logs_[1][0]) / d;
            const long double y = (logs_[0][0] * target[1] - logs_[0][1] * target[0]) / d;
            c.exponents[0] = std::lround(static_cast<double>(x));
            c.exponents[1] = std::lround(static_cast<double>(y));
        }
    }
    IntVec t = a;
    for (std::size_t j = 0; j < r; ++j) {
        const long e = c.exponents[j];
        if (e == 0) continue;
        const IntVec& base = e > 0 ? inverses_[j] : units_[j];
        t = field_.mul(t, field_.pow(base, static_cast<unsigned long>(std::labs(e))));
    }
    IntVec p = field_.one();
    for (int k = 0; k < w_; ++k) {
        if (p == t) {
            c.torsion = k;
            return c;
        }
        p = field_.mul(p, zeta_);
    }
    throw InvariantViolation("unit coordinates failed: residual is not a root of unity");
}

IntVec UnitGroup::element(const Coordinates& c) const
{
    int t = c.torsion % w_;
    if (t < 0) t += w_;
    IntVec r = field_.pow(zeta_, static_cast<unsigned long>(t));
    for (std::size_t j = 0; j < units_.size(); ++j) {
        const long e = c.exponents[j];
        if (e == 0) continue;
        const IntVec& base = e > 0 ? units_[j] : inverses_[j];
        r = field_.mul(r, field_.pow(base, static_cast<unsigned long>(std::labs(e))));
    }
    return r;
}

namespace {

// Minimal nonzero log-length unit among those no longer than `start` (rank 1).
IntVec certify_rank_one(const NumberField& field, const IntVec& start, std::uint64_t ceiling)
{
    const long double len = inf_norm(raw_logs(field, start));
    const long double bound = static_cast<long double>(field.degree()) * std::exp(2 * len) * (1 + 1e-9L);
    IntVec best = start;
    long double best_len = len;
    ShortElementEnumerator search(field, IntMatrix::identity(field.dim()));
    search.enumerate(
        bound,
        [&](const IntVec& x, long double) {
            if (abs(field.norm(x)) != 1) return true;
            const long double l = inf_norm(raw_logs(field, x));
            if (l > 1e-7L && l < best_len - 1e-9L) {
                best = x;
                best_len = l;
            }
            return true;
        },
        ceiling);
    return best;
}

}  // namespace

UnitGroup compute_unit_group(const NumberField& field, std::uint64_t ceiling)
{
    const Torsion tor = find_torsion(field);
    const int r = field.unit_rank();
    if (r == 0) return UnitGroup(field, tor.generator, tor.order, {}, true);
    if (r > 2) throw Unsupported("unit rank above 2 is not supported");
    const std::vector<IntVec> torsion = torsion_elements(field, tor.generator, tor.order);
    const long double n = static_cast<long double>(field.degree());
    ShortElementEnumerator search(field, IntMatrix::identity(field.dim()));

    if (r == 1) {
        std::optional<IntVec> any;
        for (long double bound = n + 1; !any; bound *= 2) {
            search.enumerate(
                bound,
                [&](const IntVec& x, long double) {
                    if (abs(field.norm(x)) != 1) return true;
                    if (inf_norm(raw_logs(field, x)) < 1e-7L) return true;
                    any = x;
                    return false;
                },
                ceiling);
        }
        IntVec fund = normalize_unit(field, certify_rank_one(field, *any, ceiling), torsion);
        return UnitGroup(field, tor.generator, tor.order, {fund}, true);
    }

    // rank 2: collect small units, then shrink the log lattice they generate
    std::vector<IntVec> found;
    long double bound = n + 1;
    auto collect = [&](long double b) {
        found.clear();
        search.enumerate(
            b,
            [&](const IntVec& x, long double) {
                if (abs(field.norm(x)) == 1 && inf_norm(raw_logs(field, x)) > 1e-7L) found.push_back(x);
                return true;
            },
            ceiling);
    };
    auto weighted = [&](const IntVec& u) {
        std::vector<long double> raw = raw_logs(field, u);
        for (std::size_t k = 0; k < raw.size(); ++k)
            if (k >= static_cast<std::size_t>(field.r1())) raw[k] *= 2;
        return raw;
    };
    auto has_rank_two = [&] {
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = i + 1; j < found.size(); ++j)
                if (std::fabs(det2(weighted(found[i]), weighted(found[j]))) > 1e-7L) return true;
        return false;
    };
    for (;; bound *= 2) {
        collect(bound);
        if (has_rank_two()) break;
    }
    collect(bound * 4);

    IntVec u1, u2;
    long double best = -1;
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            const long double d = std::fabs(det2(weighted(found[i]), weighted(found[j])));
            if (d > 1e-7L && (best < 0 || d < best - 1e-9L)) {
                best = d;
                u1 = found[i];
                u2 = found[j];
            }
        }
    auto power = [&](const IntVec& u, long e) {
        if (e == 0) return field.one();
        IntVec base = e > 0 ? u : unit_inverse(field, u);
        return field.pow(base, static_cast<unsigned long>(std::labs(e)));
    };
    for (bool changed = true; changed;) {
        changed = false;
        const auto l1 = weighted(u1), l2 = weighted(u2);
        const long double d = det2(l1, l2);
        for (const auto& v : found) {
            const auto lv = weighted(v);
            const long double a = det2(lv, l2) / d;
            const long double b = det2(l1, lv) / d;
            const long double fa = a - std::floor(a + 1e-7L), fb = b - std::floor(b + 1e-7L);
            if (std::fabs(fa) < 1e-6L && std::fabs(fb) < 1e-6L) continue;
            IntVec w = field.mul(v, field.mul(power(u1, -static_cast<long>(std::floor(a + 1e-7L))),
                                              power(u2, -static_cast<long>(std::floor(b + 1e-7L)))));
            if (std::fabs(fb) > 1e-6L) u2 = w;
            else u1 = w;
            changed = true;
            break;
        }
    }
    return UnitGroup(field, tor.generator, tor.order,
                     {normalize_unit(field, u1, torsion), normalize_unit(field, u2, torsion)}, false);
}

UnitGroup unit_group_from_known(const NumberField& field, const std::vector<IntVec>& units)
{
    const Torsion tor = find_torsion(field);
    if (static_cast<int>(units.size()) != field.unit_rank())
        throw InvalidInput("known_units must list exactly r1 + r2 - 1 units");
    for (const auto& u : units)
        if (u.size() != field.dim() || abs(field.norm(u)) != 1) throw InvalidInput("known_units entry is not a unit");
    if (units.size() == 1) {
        IntVec shortest = certify_rank_one(field, units[0], Ceilings::defaults().lattice_points);
        if (inf_norm(raw_logs(field, shortest)) < inf_norm(raw_logs(field, units[0])) - 1e-9L)
            throw InvalidInput("known unit is not fundamental");
        return UnitGroup(field, tor.generator, tor.order, units, true);
    }
    return UnitGroup(field, tor.generator, tor.order, units, units.empty());
}

const UnitGroup& unit_group(const NumberField& field)
{
    auto& cache = field.caches();
    std::lock_guard lock(cache.units_mutex);
    if (!cache.units) cache.units = std::make_shared<const UnitGroup>(compute_unit_group(field));
    return *cache.units;
}

void install_unit_group(const NumberField& field, const UnitGroup& units)
{
    field.require_same(units.field());
    auto& cache = field.caches();
    std::lock_guard lock(cache.units_mutex);
    cache.units = std::make_shared<const UnitGroup>(units);
}

long double regulator(const UnitGroup& units) { return units.regulator(); }

// ---------------- U / U^ell ----------------

UnitCosets::UnitCosets(const UnitGroup& units, int ell) : units_(&units), ell_(ell)
{
    const int w = units.torsion_order();
    if (ell < 2 || w % ell != 0) throw InvalidInput("zeta_ell is not in K");
    int c = w;
    while (c % ell == 0) c /= ell;
    zeta_step_ = c;
    const NumberField& field = units.field();
    const IntVec zeta = field.pow(units.torsion_generator(), static_cast<unsigned long>(c));
    std::vector<IntVec> cur{field.one()};
    {
        std::vector<IntVec> next;
        IntVec p = field.one();
        for (int a = 0; a < ell; ++a) {
            next.push_back(p);
            p = field.mul(p, zeta);
        }
        cur = next;
    }
    for (const auto& u : units.fundamental_units()) {
        std::vector<IntVec> next;
        IntVec p = field.one();
        for (int b = 0; b < ell; ++b) {
            for (const auto& x : cur) next.push_back(field.mul(x, p));
            p = field.mul(p, u);
        }
        cur = std::move(next);
    }
    reps_ = std::move(cur);
}

std::size_t UnitCosets::index_of(const IntVec& a) const
{
    const UnitGroup::Coordinates c = units_->coordinates(a);
    long inv = 1;
    for (long k = 1; k < ell_; ++k)
        if ((k * zeta_step_) % ell_ == 1) inv = k;
    auto mod = [&](long x) {
        long r = x % ell_;
        return r < 0 ? r + ell_ : r;
    };
    std::size_t idx = 0;
    for (std::size_t j = c.exponents.size(); j-- > 0;) idx = idx * static_cast<std::size_t>(ell_) + static_cast<std::size_t>(mod(c.exponents[j]));
    idx = idx * static_cast<std::size_t>(ell_) + static_cast<std::size_t>(mod(c.torsion * inv));
    return idx;
}

std::size_t UnitCosets::power_index(std::size_t i, int m) const
{
    std::size_t out = 0, scale = 1;
    const std::size_t l = static_cast<std::size_t>(ell_);
    for (std::size_t x = i; scale < reps_.size(); scale *= l, x /= l) {
        const std::size_t digit = (x % l) * static_cast<std::size_t>(((m % ell_) + ell_) % ell_) % l;
        out += digit * scale;
    }
    return out;
}

std::size_t UnitCosets::product_index(std::size_t i, std::size_t j) const
{
    std::size_t out = 0, scale = 1;
    const std::size_t l = static_cast<std::size_t>(ell_);
    for (std::size_t x = i, y = j; scale < reps_.size(); scale *= l, x /= l, y /= l) out += ((x % l + y % l) % l) * scale;
    return out;
}

std::vector<IntVec> unit_coset_reps(const UnitGroup& units, int ell) { return UnitCosets(units, ell).reps(); }

}  // namespace nfk
