#include "nfk/kummer.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/residue_ring.hpp"

#include <algorithm>

namespace nfk {

namespace {

FactoredIdeal free_part(const PartsDecomposition& parts)
{
    FactoredIdeal f(parts.power_root.field());
    for (int i = 1; i < parts.ell; ++i) f = f * parts.power_parts[static_cast<std::size_t>(i)].pow(i);
    return f;
}

// Exponents reduced mod ell.
FactoredIdeal power_free(const FactoredIdeal& a, int ell)
{
    FactoredIdeal r(a.field());
    for (const auto& [q, e] : a.terms()) r.multiply_by(q, ((e % ell) + ell) % ell);
    return r;
}

}  // namespace

std::string TupleKey::str() const
{
    return "(u=" + std::to_string(unit) + ",R=" + std::to_string(power_class) + ",Q=" + ell_part + ",I=" + free_part + ")";
}

KummerField::KummerField(NumberField field, int ell) : field_(std::move(field)), ell_(ell)
{
    if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) throw InvalidInput("ell must be prime");
    if (!field_.contains_zeta(ell)) throw InvalidInput("K does not contain the ell-th roots of unity");
    classes_ = std::make_shared<const ClassGroup>(class_group(field_));
    units_ = std::make_shared<const UnitGroup>(unit_group(field_));
    cosets_ = std::make_shared<UnitCosets>(*units_, ell);
    ell_primes_ = primes_above(field_, BigInt(ell));
    for (const auto& q : ell_primes_) {
        std::vector<Ideal> powers;
        Ideal p = q.ideal();
        if (q.e() % (ell - 1) != 0) throw InvariantViolation("ramification above ell is not a multiple of ell - 1");
        for (int m = 1; m <= ell * q.e() / (ell - 1); ++m) {
            powers.push_back(p);
            p = p * q.ideal();
        }
        depth_ideals_.push_back(std::move(powers));
    }
    for (const auto& c : classes_->group().elements())
        class_reps_.push_back(factor_ideal(classes_->ell_free_representative(c, ell)));
}

KummerDatum KummerField::datum_from_parts(const IntVec& generator, std::size_t unit, const ClassGroup::Element& cls,
                                          FactoredIdeal factored) const
{
    PartsDecomposition parts = decompose_parts(factored, ell_);
    KummerDatum d{field_, ell_, field_.mul(generator, cosets_->rep(unit)), std::move(factored), std::move(parts), unit, cls, {}};
    d.key = {unit, classes_->group().index(cls), d.parts.ell_part.str(), free_part(d.parts).str()};
    return d;
}

KummerDatum KummerField::normalize(const IntVec& gamma) const
{
    if (field_.is_zero(gamma)) throw InvalidInput("gamma must be nonzero");
    return normalize(gamma, factor_element(field_, gamma));
}

KummerDatum KummerField::normalize(const IntVec& gamma, const FactoredIdeal& factored) const
{
    if (field_.is_zero(gamma)) throw InvalidInput("gamma must be nonzero");
    const PartsDecomposition parts = decompose_parts(factored, ell_);
    FactoredIdeal reduced(field_), lift(field_);
    for (const auto& [q, e] : parts.ell_part.terms()) {
        reduced.multiply_by(q, e % ell_);
        lift.multiply_by(q, e / ell_);
    }
    const FactoredIdeal root = parts.power_root * lift;
    const ClassGroup::Element cls = classes_->class_of(root);
    const FactoredIdeal& rep = class_reps_.at(classes_->group().index(cls));
    const FactoredIdeal target = rep.pow(ell_) * reduced * free_part(parts);

    // gamma / k^ell generates target when (k) = root / rep
    const auto k = principal_test_generator(FractionalIdeal::from_factored(root / rep));
    if (!k) throw InvariantViolation("power root and its class representative differ by a non-principal ideal");
    const AlgebraicNumber shifted = AlgebraicNumber(field_, gamma) / k->pow(ell_);
    const IntVec a = canonical_generator(target.to_ideal());
    const AlgebraicNumber u = shifted / AlgebraicNumber(field_, a);
    if (!u.is_integral()) throw InvariantViolation("normalization produced a non-integral unit");
    const std::size_t unit = cosets_->index_of(u.numerator());
    if (target.is_one() && unit == 0) throw InvalidInput("degenerate extension: gamma is an ell-th power in K");
    return datum_from_parts(a, unit, cls, target);
}

int KummerField::power_depth(const IntVec& gamma, std::size_t prime_index) const
{
    const auto& depths = depth_ideals_.at(prime_index);
    for (std::size_t m = depths.size(); m > 0; --m)
        if (is_power_class(gamma, depths[m - 1], ell_)) return static_cast<int>(m);
    throw InvariantViolation("unit is not an ell-th power modulo a prime above ell");
}

std::vector<int> KummerField::admissible_exponents(std::size_t prime_index) const
{
    const PrimeIdeal& q = ell_primes_.at(prime_index);
    const int top = ell_ * q.e() / (ell_ - 1);
    std::vector<int> out{0};
    for (int s = top - 1; s >= 1; --s) out.push_back((ell_ - 1) * (top - s + 1));
    out.push_back((ell_ - 1) + ell_ * q.e());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Discriminant KummerField::relative_discriminant(const KummerDatum& d) const
{
    field_.require_same(d.field);
    Discriminant r{FactoredIdeal(field_), FactoredIdeal(field_), FactoredIdeal(field_), 0};
    const BigInt l(ell_);
    for (const auto& [q, e] : d.factored.terms()) {
        if (q.divides_integer(l) || e % ell_ == 0) continue;
        r.ell_free_part.multiply_by(q, ell_ - 1);
    }
    for (std::size_t i = 0; i < ell_primes_.size(); ++i) {
        const PrimeIdeal& q = ell_primes_[i];
        const int v = d.factored.exponent(q);
        const int top = ell_ * q.e() / (ell_ - 1);
        int x = 0;
        if (v % ell_ != 0) {
            x = (ell_ - 1) + ell_ * q.e();
        } else {
            if (v != 0) throw InvalidInput("gamma is not normalized above ell");
            const int s = power_depth(d.gamma, i);
            x = s == top ? 0 : (ell_ - 1) * (top - s + 1);
        }
        r.ell_part.multiply_by(q, x);
    }
    r.delta = r.ell_part * r.ell_free_part;
    r.norm = r.delta.norm().get_num();
    return r;
}

SteinitzResult KummerField::steinitz_class(const KummerDatum& d, const Discriminant& disc) const
{
    FactoredIdeal den = d.parts.ell_part * d.parts.power_root.pow(ell_);
    for (int i = 2; i < ell_; ++i) den = den * d.parts.power_parts[static_cast<std::size_t>(i)].pow(i - 1);
    den = den.pow(ell_ - 1);
    const FactoredIdeal square = disc.ell_part / den;
    FactoredIdeal root(field_);
    try {
        root = sqrt_of_square(square);
    } catch (const InvalidInput&) {
        throw InvariantViolation("Steinitz ideal is not a square: " + square.str());
    }
    if (!(root.pow(2) * den == disc.ell_part)) throw InvariantViolation("Steinitz identity fails for " + d.key.str());
    return {root, classes_->class_of(root)};
}

TupleKey KummerField::orbit_key(const KummerDatum& d) const
{
    TupleKey best = d.key;
    IntVec g = d.gamma;
    for (int m = 2; m < ell_; ++m) {
        g = field_.mul(g, d.gamma);
        const TupleKey k = normalize(g, d.factored.pow(m)).key;
        if (k < best) best = k;
    }
    return best;
}

bool KummerField::is_isomorphic(const KummerDatum& a, const KummerDatum& b) const
{
    field_.require_same(a.field);
    field_.require_same(b.field);
    if (a.ell != ell_ || b.ell != ell_) throw InvalidInput("data belong to a different ell");
    IntVec g = a.gamma;
    for (int m = 1; m < ell_; ++m) {
        if (m > 1) g = field_.mul(g, a.gamma);
        if (normalize(g, a.factored.pow(m)).key == b.key) return true;
    }
    return false;
}

bool KummerField::ideal_criterion(const KummerDatum& a, const KummerDatum& b) const
{
    const FactoredIdeal lf_b = power_free(b.factored, ell_);
    const ClassGroup::Element cls_b = classes_->class_of(b.factored / lf_b);
    for (int m = 1; m < ell_; ++m) {
        const FactoredIdeal am = a.factored.pow(m);
        const FactoredIdeal lf_a = power_free(am, ell_);
        if (lf_a == lf_b && classes_->class_of(am / lf_a) == cls_b) return true;
    }
    return false;
}

bool KummerField::is_ell_power(const AlgebraicNumber& x) const
{
    if (x.is_zero()) return true;
    const FactoredIdeal f = factor_element(field_, x.numerator()) / factor_integer_ideal(field_, x.denominator());
    FactoredIdeal root(field_);
    for (const auto& [q, e] : f.terms()) {
        if (e % ell_ != 0) return false;
        root.multiply_by(q, e / ell_);
    }
    const auto b = principal_test_generator(FractionalIdeal::from_factored(root));
    if (!b) return false;
    const AlgebraicNumber unit = x / b->pow(ell_);
    if (!unit.is_integral()) throw InvariantViolation("quotient by an ell-th power root is not a unit");
    return cosets_->index_of(unit.numerator()) == 0;
}

ExtensionRecord KummerField::make_record(KummerDatum d, Discriminant disc) const
{
    SteinitzResult st = steinitz_class(d, disc);
    TupleKey orbit = orbit_key(d);
    return {std::move(d), std::move(disc), std::move(st), std::move(orbit)};
}

void KummerField::enumerate(const BigInt& bound, const std::function<void(const ExtensionRecord&)>& visit,
                            const EnumerationOptions& options) const
{
    if (bound < 1) return;
    const FiniteAbelianGroup& cl = classes_->group();
    using Element = ClassGroup::Element;

    struct QChoice {
        FactoredIdeal ideal;
        Element cls;
        BigInt least_ell_norm;
    };
    std::vector<QChoice> qs{{FactoredIdeal(field_), cl.identity(), 1}};
    for (const auto& q : ell_primes_) {
        std::vector<QChoice> next;
        const Element qc = classes_->class_of(q);
        const BigInt top = nfk::pow(q.norm(), static_cast<unsigned long>((ell_ - 1) + ell_ * q.e()));
        for (const auto& c : qs)
            for (int e = 0; e < ell_; ++e) {
                QChoice n = c;
                if (e > 0) {
                    n.ideal.multiply_by(q, e);
                    n.cls = cl.add(n.cls, cl.scale(qc, e));
                    n.least_ell_norm *= top;
                }
                next.push_back(std::move(n));
            }
        qs = std::move(next);
    }

    const BigInt prime_bound = root_floor(bound, static_cast<unsigned>(ell_ - 1));
    std::vector<PrimeIdeal> primes;
    std::vector<Element> prime_cls;
    std::vector<BigInt> prime_weight;  // N(p)^{ell-1}
    for (const auto& p : primes_up_to_norm(field_, prime_bound)) {
        if (p.divides_integer(BigInt(ell_))) continue;
        primes.push_back(p);
        prime_cls.push_back(classes_->class_of(p));
        prime_weight.push_back(nfk::pow(p.norm(), static_cast<unsigned long>(ell_ - 1)));
    }
    const std::vector<Element> all_classes = cl.elements();

    auto emit = [&](const FactoredIdeal& free, const BigInt& weight, const Element& free_cls) {
        for (const auto& q : qs) {
            if (weight * q.least_ell_norm > bound) continue;
            for (std::size_t r = 0; r < all_classes.size(); ++r) {
                const Element total = cl.add(cl.add(cl.scale(all_classes[r], ell_), q.cls), free_cls);
                if (!cl.is_identity(total)) continue;
                FactoredIdeal target = class_reps_[r].pow(ell_) * q.ideal * free;
                const IntVec a = canonical_generator(target.to_ideal());
                for (std::size_t u = 0; u < cosets_->size(); ++u) {
                    if (target.is_one() && u == 0) continue;
                    KummerDatum d = datum_from_parts(a, u, all_classes[r], target);
                    Discriminant disc = relative_discriminant(d);
                    if (disc.norm > bound) continue;
                    ExtensionRecord rec = make_record(std::move(d), std::move(disc));
                    if (options.dedup && !(rec.orbit_key == rec.datum.key)) continue;
                    visit(rec);
                }
            }
        }
    };

    std::function<void(std::size_t, const FactoredIdeal&, const BigInt&, const Element&)> walk =
        [&](std::size_t start, const FactoredIdeal& free, const BigInt& weight, const Element& cls) {
            emit(free, weight, cls);
            for (std::size_t i = start; i < primes.size(); ++i) {
                const BigInt w = weight * prime_weight[i];
                if (w > bound) break;
                for (int e = 1; e < ell_; ++e) {
                    FactoredIdeal next = free;
                    next.multiply_by(primes[i], e);
                    walk(i + 1, next, w, cl.add(cls, cl.scale(prime_cls[i], e)));
                }
            }
        };
    walk(0, FactoredIdeal(field_), BigInt(1), cl.identity());
}

std::vector<ExtensionRecord> KummerField::collect(const BigInt& bound, const EnumerationOptions& options) const
{
    std::vector<ExtensionRecord> out;
    enumerate(bound, [&](const ExtensionRecord& r) { out.push_back(r); }, options);
    std::stable_sort(out.begin(), out.end(), [](const ExtensionRecord& a, const ExtensionRecord& b) {
        if (a.discriminant.norm != b.discriminant.norm) return a.discriminant.norm < b.discriminant.norm;
        return a.datum.key < b.datum.key;
    });
    return out;
}

std::vector<bool> KummerField::realizable_classes() const { return realizable_class_subgroup(*classes_, ell_); }

// ---------------- free functions ----------------

KummerDatum normalize_gamma(const NumberField& field, const IntVec& gamma, int ell)
{
    return KummerField(field, ell).normalize(gamma);
}

Discriminant relative_discriminant(const KummerDatum& d) { return KummerField(d.field, d.ell).relative_discriminant(d); }

TraceFormCheck trace_form_discriminant(const NumberField& field, const IntVec& gamma, int ell)
{
    if (field.is_zero(gamma)) throw InvalidInput("gamma must be nonzero");
    if (ell < 2) throw InvalidInput("ell must be prime");
    const AlgebraicNumber g(field, gamma);
    const AlgebraicNumber zero = AlgebraicNumber::from_int(field, 0);
    const std::size_t n = static_cast<std::size_t>(ell);
    std::vector<std::vector<AlgebraicNumber>> t(n, std::vector<AlgebraicNumber>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = i + j;
            if (k % n == 0) t[i][j] = AlgebraicNumber::from_int(field, ell) * g.pow(static_cast<long>(k / n));
        }
    AlgebraicNumber det = AlgebraicNumber::from_int(field, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && t[p][c].is_zero()) ++p;
        if (p == n) {
            det = zero;
            break;
        }
        if (p != c) {
            std::swap(t[p], t[c]);
            det = zero - det;
        }
        det = det * t[c][c];
        const AlgebraicNumber inv = t[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (t[r][c].is_zero()) continue;
            const AlgebraicNumber f = t[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) t[r][k] = t[r][k] - f * t[c][k];
        }
    }
    const AlgebraicNumber lead = AlgebraicNumber::from_int(field, nfk::pow(BigInt(ell), static_cast<unsigned long>(ell)));
    const AlgebraicNumber formula = ell == 2 ? lead * g : zero - lead * g.pow(ell - 1);
    return {formula, det, formula == det};
}

SteinitzResult steinitz_class(const KummerDatum& d, const ClassGroup& cg)
{
    d.field.require_same(cg.field());
    const KummerField kf(d.field, d.ell);
    return kf.steinitz_class(d, kf.relative_discriminant(d));
}

bool is_isomorphic(const KummerDatum& a, const KummerDatum& b)
{
    if (a.ell != b.ell) return false;
    if (!a.field.same_as(b.field)) throw InvalidInput("data live over different fields");
    return KummerField(a.field, a.ell).is_isomorphic(a, b);
}

std::vector<ExtensionRecord> enumerate_extensions(const NumberField& field, int ell, const BigInt& bound,
                                                  const EnumerationOptions& options)
{
    return KummerField(field, ell).collect(bound, options);
}

std::vector<bool> realizable_class_subgroup(const ClassGroup& cg, int ell)
{
    const FiniteAbelianGroup& g = cg.group();
    std::vector<bool> in(g.order(), ell == 2);
    if (ell == 2) return in;
    for (const auto& x : g.elements()) in[g.index(g.scale(x, (ell - 1) / 2))] = true;
    return in;
}

}  // namespace nfk
