#include "nfk/class_group.hpp"
#include "field_caches.hpp"

#include <functional>

namespace nfk {

namespace {

FactoredIdeal prime_power(const NumberField& field, const PrimeIdeal& q, int e)
{
    FactoredIdeal f(field);
    f.multiply_by(q, e);
    return f;
}

// N(a) a^{-1}, integral and in the inverse class.
Ideal conjugate_ideal(const FactoredIdeal& a)
{
    const BigRational n = a.norm();
    return (factor_integer_ideal(a.field(), n.get_num()) / a).to_ideal();
}

bool equivalent(const Ideal& a, const Ideal& conj_b) { return principal_generator(a * conj_b).has_value(); }

}  // namespace

ClassGroup::Element ClassGroup::class_of(const PrimeIdeal& q) const
{
    {
        std::lock_guard lock(state_->mutex);
        auto it = state_->prime_classes.find(q);
        if (it != state_->prime_classes.end()) return it->second;
    }
    Element found;
    bool ok = false;
    if (group_.trivial()) {
        found = group_.identity();
        ok = true;
    } else {
        for (std::uint64_t i = 0; i < h() && !ok; ++i) {
            Ideal conj = Ideal::unit(field_);
            {
                std::lock_guard lock(state_->mutex);
                conj = conjugate_ideal(state_->rep_conjugates.at(i));
            }
            if (equivalent(q.ideal(), conj)) {
                found = group_.element(i);
                ok = true;
            }
        }
    }
    if (!ok) throw InvariantViolation("prime ideal " + q.str() + " matches no ideal class");
    std::lock_guard lock(state_->mutex);
    state_->prime_classes.emplace(q, found);
    return found;
}

ClassGroup::Element ClassGroup::class_of(const FactoredIdeal& a) const
{
    field_.require_same(a.field());
    Element c = group_.identity();
    for (const auto& [q, e] : a.terms()) c = group_.add(c, group_.scale(class_of(q), e));
    return c;
}

ClassGroup::Element ClassGroup::class_of(const Ideal& a) const { return class_of(factor_ideal(a)); }

ClassGroup::Element ClassGroup::class_of(const FractionalIdeal& a) const { return class_of(a.factor()); }

Ideal ClassGroup::representative(const Element& c) const
{
    std::lock_guard lock(state_->mutex);
    return state_->reps.at(group_.index(group_.reduce(c)));
}

std::map<std::uint64_t, Ideal> ClassGroup::smallest_ideals(const std::vector<PrimeIdeal>& primes,
                                                           const BigInt& bound) const
{
    std::map<std::uint64_t, std::pair<BigInt, Ideal>> best;
    std::vector<Element> classes;
    std::vector<BigInt> norms;
    for (const auto& q : primes) {
        classes.push_back(class_of(q));
        norms.push_back(q.norm());
    }
    std::uint64_t visited = 0;
    const std::uint64_t ceiling = Ceilings::defaults().census_norm;
    std::function<void(std::size_t, const FactoredIdeal&, const BigInt&, const Element&)> walk =
        [&](std::size_t start, const FactoredIdeal& cur, const BigInt& norm, const Element& cls) {
            if (++visited > ceiling) throw CeilingExceeded("ideal census", ceiling);
            const std::uint64_t idx = group_.index(cls);
            auto it = best.find(idx);
            if (it == best.end() || norm <= it->second.first) {
                Ideal id = cur.to_ideal();
                if (it == best.end()) best.emplace(idx, std::make_pair(norm, id));
                else if (norm < it->second.first || id < it->second.second) it->second = {norm, id};
            }
            for (std::size_t i = start; i < primes.size(); ++i) {
                if (norm * norms[i] > bound) continue;
                FactoredIdeal next = cur;
                BigInt n = norm;
                Element c = cls;
                while (n * norms[i] <= bound) {
                    n *= norms[i];
                    next.multiply_by(primes[i], 1);
                    c = group_.add(c, classes[i]);
                    walk(i + 1, next, n, c);
                }
            }
        };
    walk(0, FactoredIdeal(field_), BigInt(1), group_.identity());
    std::map<std::uint64_t, Ideal> out;
    for (auto& [k, v] : best) out.emplace(k, v.second);
    return out;
}

Ideal ClassGroup::ell_free_representative(const Element& c, int ell) const
{
    const std::uint64_t idx = group_.index(group_.reduce(c));
    {
        std::lock_guard lock(state_->mutex);
        auto it = state_->ell_free.find(ell);
        if (it != state_->ell_free.end()) return it->second.at(idx);
    }
    BigInt bound = 2;
    for (const auto& [k, r] : state_->reps)
        if (r.norm() > bound) bound = r.norm();
    const BigInt limit = from_uint64(Ceilings::defaults().census_norm);
    for (;; bound *= 2) {
        if (bound > limit) throw CeilingExceeded("ell-free class representatives", Ceilings::defaults().census_norm);
        std::vector<PrimeIdeal> primes;
        for (const auto& q : primes_up_to_norm(field_, bound))
            if (!q.divides_integer(BigInt(ell))) primes.push_back(q);
        auto found = smallest_ideals(primes, bound);
        if (found.size() < h()) continue;
        std::lock_guard lock(state_->mutex);
        auto& slot = state_->ell_free[ell];
        slot = std::move(found);
        return slot.at(idx);
    }
}

ClassGroup compute_class_group(const NumberField& field, std::optional<std::uint64_t> known_h,
                               const Ceilings& ceilings)
{
    ClassGroup cg(field);
    const BigRational mb = field.minkowski_bound();
    const BigInt bound = floor_div(mb.get_num(), mb.get_den());
    if (bound > from_uint64(ceilings.minkowski_norm)) throw CeilingExceeded("Minkowski bound", ceilings.minkowski_norm);
    cg.gens_ = primes_up_to_norm(field, bound);
    const std::size_t k = cg.gens_.size();

    struct Node {
        FactoredIdeal factored;
        Ideal ideal;
        Ideal conj;
        std::vector<long> word;
    };
    std::vector<Node> nodes;
    nodes.push_back({FactoredIdeal(field), Ideal::unit(field), Ideal::unit(field), std::vector<long>(k, 0)});
    std::vector<std::vector<long>> relations;
    for (std::size_t c = 0; c < nodes.size(); ++c) {
        for (std::size_t j = 0; j < k; ++j) {
            FactoredIdeal bf = nodes[c].factored * prime_power(field, cg.gens_[j], 1);
            Ideal b = bf.to_ideal();
            std::vector<long> word = nodes[c].word;
            ++word[j];
            std::size_t d = 0;
            for (; d < nodes.size(); ++d)
                if (equivalent(b, nodes[d].conj)) break;
            if (d == nodes.size()) {
                if (nodes.size() >= ceilings.census_norm) throw CeilingExceeded("class census", ceilings.census_norm);
                Ideal conj = conjugate_ideal(bf);
                nodes.push_back({std::move(bf), std::move(b), std::move(conj), std::move(word)});
            } else {
                for (std::size_t t = 0; t < k; ++t) word[t] -= nodes[d].word[t];
                relations.push_back(std::move(word));
            }
        }
    }
    if (k > 0) {
        IntMatrix rel(k, relations.size());
        for (std::size_t r = 0; r < relations.size(); ++r)
            for (std::size_t t = 0; t < k; ++t) rel(t, r) = relations[r][t];
        PresentedGroup pg(rel);
        cg.group_ = pg.group();
        for (std::size_t j = 0; j < k; ++j) cg.state_->prime_classes.emplace(cg.gens_[j], pg.generator_image(j));
    }
    if (cg.group_.order() != nodes.size())
        throw InvariantViolation("class census found " + std::to_string(nodes.size()) + " classes but the relations give " +
                                 std::to_string(cg.group_.order()));
    if (known_h && *known_h != cg.h())
        throw InvalidInput("supplied class number " + std::to_string(*known_h) + " disagrees with the computed " +
                           std::to_string(cg.h()));

    auto reps = cg.smallest_ideals(cg.gens_, std::max(bound, BigInt(1)));
    if (reps.size() != cg.h()) throw InvariantViolation("class representatives do not cover the class group");
    for (auto& [idx, r] : reps) cg.state_->rep_conjugates.emplace(idx, factor_ideal(r).pow(-1) * factor_integer_ideal(field, r.norm()));
    cg.state_->reps = std::move(reps);
    return cg;
}

const ClassGroup& class_group(const NumberField& field)
{
    auto& cache = field.caches();
    std::lock_guard lock(cache.class_mutex);
    if (!cache.classes) cache.classes = std::make_shared<const ClassGroup>(compute_class_group(field));
    return *cache.classes;
}

void install_class_group(const NumberField& field, const ClassGroup& group)
{
    field.require_same(group.field());
    auto& cache = field.caches();
    std::lock_guard lock(cache.class_mutex);
    cache.classes = std::make_shared<const ClassGroup>(group);
}

}  // namespace nfk
