#include "nfk/residue_ring.hpp"

#include <limits>
#include <map>
#include <mutex>

namespace nfk {

namespace {

std::vector<std::vector<std::int64_t>> small_hnf(const Ideal& m)
{
    const std::size_t n = m.field().dim();
    std::vector<std::vector<std::int64_t>> h(n, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h[r][c] = to_int64(m.hnf()(r, c));
    return h;
}

std::int64_t fmod64(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

ResidueRing::ResidueRing(const Ideal& m, std::uint64_t ceiling) : m_(m), n_(m.field().dim())
{
    if (m.norm() > from_uint64(ceiling))
        throw CeilingExceeded("residue ring O_K/m with N(m) = " + m.norm().get_str(), ceiling);
    size_ = to_uint64(m.norm());
    m0_ = to_int64(m.min_integer());
    h_ = small_hnf(m);
    const NumberField& field = m.field();
    IntVec power = field.one();
    for (std::size_t i = 0; i < n_; ++i) {
        IntMatrix mm = field.mult_matrix(power);
        std::vector<std::vector<std::int64_t>> t(n_, std::vector<std::int64_t>(n_));
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t[r][c] = floor_mod(mm(r, c), BigInt(m0_)).get_si();
        basis_mult_.push_back(std::move(t));
        power = field.mul(power, field.generator());
    }
    if (size_ > 1) {
        const FactoredIdeal factored = factor_ideal(m);
        for (const auto& [q, e] : factored.terms()) {
            primes_.push_back(q);
            prime_h_.push_back(small_hnf(q.ideal()));
            prime_m0_.push_back(to_int64(q.ideal().min_integer()));
        }
    }
}

ResidueRing::Residue ResidueRing::unit_vector() const
{
    Residue r(n_, 0);
    r[0] = 1;
    return r;
}

ResidueRing::Residue ResidueRing::reduce_with(Residue x, const std::vector<std::vector<std::int64_t>>& h, std::int64_t m0)
{
    const std::size_t n = x.size();
    for (auto& v : x) v = fmod64(v, m0);
    for (std::size_t i = n; i-- > 0;) {
        const std::int64_t q = x[i] >= 0 ? x[i] / h[i][i] : -((-x[i] + h[i][i] - 1) / h[i][i]);
        if (q == 0) continue;
        for (std::size_t r = 0; r <= i; ++r) x[r] -= q * h[r][i];
    }
    return x;
}

ResidueRing::Residue ResidueRing::reduce_small(Residue x) const { return reduce_with(std::move(x), h_, m0_); }

ResidueRing::Residue ResidueRing::reduce(const IntVec& a) const
{
    Residue x(n_);
    const BigInt m0(m0_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = floor_mod(a[i], m0).get_si();
    return reduce_small(std::move(x));
}

ResidueRing::Residue ResidueRing::mul(const Residue& a, const Residue& b) const
{
    std::vector<__int128> acc(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        const auto& t = basis_mult_[i];
        for (std::size_t r = 0; r < n_; ++r) {
            __int128 s = 0;
            for (std::size_t c = 0; c < n_; ++c) s += static_cast<__int128>(t[r][c]) * b[c];
            acc[r] += static_cast<__int128>(a[i]) * (s % m0_);
        }
    }
    Residue x(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        __int128 v = acc[r] % m0_;
        if (v < 0) v += m0_;
        x[r] = static_cast<std::int64_t>(v);
    }
    return reduce_small(std::move(x));
}

ResidueRing::Residue ResidueRing::pow(Residue a, std::uint64_t e) const
{
    Residue r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

std::uint64_t ResidueRing::index(const Residue& a) const
{
    std::uint64_t idx = 0;
    for (std::size_t i = n_; i-- > 0;) idx = idx * static_cast<std::uint64_t>(h_[i][i]) + static_cast<std::uint64_t>(a[i]);
    return idx;
}

ResidueRing::Residue ResidueRing::residue(std::uint64_t index) const
{
    Residue a(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        a[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(h_[i][i]));
        index /= static_cast<std::uint64_t>(h_[i][i]);
    }
    return a;
}

IntVec ResidueRing::lift(const Residue& a) const
{
    IntVec v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = static_cast<long>(a[i]);
    return v;
}

bool ResidueRing::is_unit(const Residue& a) const
{
    for (std::size_t k = 0; k < primes_.size(); ++k) {
        Residue r = reduce_with(a, prime_h_[k], prime_m0_[k]);
        bool zero = true;
        for (auto v : r)
            if (v != 0) zero = false;
        if (zero) return false;
    }
    return true;
}

// ---------------- (O_K/m)^x ----------------

ResidueUnitGroup::ResidueUnitGroup(const Ideal& m, std::uint64_t ceiling) : ring_(m, ceiling)
{
    const std::uint64_t size = ring_.size();
    if (size > kNone) throw Unsupported("residue ring too large");
    BigRational phi(m.norm());
    for (const auto& q : ring_.primes()) phi *= BigRational(q.norm() - 1, q.norm());
    const std::uint64_t order = to_uint64(phi.get_num());

    table_.assign(size, kNone);
    std::vector<std::uint64_t> members{ring_.index(ring_.one())};
    table_[members[0]] = 0;
    std::uint64_t radix = 1;
    std::vector<std::vector<long>> relation_cols;
    std::uint64_t scan = 0;
    while (members.size() < order) {
        ResidueRing::Residue x;
        for (;; ++scan) {
            if (scan >= size) throw InvariantViolation("unit census ran out of residues");
            if (table_[scan] != kNone) continue;
            x = ring_.residue(scan);
            if (ring_.is_unit(x)) break;
        }
        // smallest j with x^j in the current subgroup
        ResidueRing::Residue p = x;
        long j = 1;
        while (table_[ring_.index(p)] == kNone) {
            p = ring_.mul(p, x);
            ++j;
        }
        const std::uint32_t landing = table_[ring_.index(p)];
        std::vector<long> rel(radix_.size() + 1, 0);
        {
            std::uint64_t c = landing;
            for (std::size_t g = 0; g < radix_.size(); ++g) {
                rel[g] = -static_cast<long>(c % static_cast<std::uint64_t>(radix_[g]));
                c /= static_cast<std::uint64_t>(radix_[g]);
            }
            rel.back() = j;
        }
        relation_cols.push_back(std::move(rel));

        const std::size_t base_count = members.size();
        ResidueRing::Residue xt = x;
        for (long t = 1; t < j; ++t) {
            for (std::size_t s = 0; s < base_count; ++s) {
                const ResidueRing::Residue prod = ring_.mul(ring_.residue(members[s]), xt);
                const std::uint64_t idx = ring_.index(prod);
                table_[idx] = static_cast<std::uint32_t>(table_[members[s]] + static_cast<std::uint64_t>(t) * radix);
                members.push_back(idx);
            }
            xt = ring_.mul(xt, x);
        }
        radix_.push_back(j);
        radix *= static_cast<std::uint64_t>(j);
        gens_.push_back(x);
    }
    const std::size_t k = radix_.size();
    IntMatrix rel(k, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < relation_cols[c].size(); ++r) rel(r, c) = relation_cols[c][r];
    presented_ = std::make_unique<PresentedGroup>(rel);
    if (presented_->group().order() != order) throw InvariantViolation("residue unit group order mismatch");
}

FiniteAbelianGroup::Element ResidueUnitGroup::dlog(const ResidueRing::Residue& a) const
{
    std::uint32_t c = table_[ring_.index(a)];
    if (c == kNone) throw InvalidInput("residue is not a unit modulo the ideal");
    std::vector<long> coords(radix_.size());
    std::uint64_t v = c;
    for (std::size_t g = 0; g < radix_.size(); ++g) {
        coords[g] = static_cast<long>(v % static_cast<std::uint64_t>(radix_[g]));
        v /= static_cast<std::uint64_t>(radix_[g]);
    }
    return presented_->image(coords);
}

std::vector<ResidueRing::Residue> ResidueUnitGroup::units() const
{
    std::vector<ResidueRing::Residue> out;
    for (std::uint64_t i = 0; i < table_.size(); ++i)
        if (table_[i] != kNone) out.push_back(ring_.residue(i));
    return out;
}

ResidueUnitGroup unit_group_mod_ideal(const Ideal& m, std::uint64_t ceiling) { return ResidueUnitGroup(m, ceiling); }

// ---------------- power tables ----------------

PowerResidueTable::PowerResidueTable(const Ideal& m, int ell, std::uint64_t ceiling) : ring_(m, ceiling)
{
    powers_.assign(ring_.size(), false);
    for (std::uint64_t i = 0; i < ring_.size(); ++i) {
        ResidueRing::Residue x = ring_.residue(i);
        if (!ring_.is_unit(x)) continue;
        powers_[ring_.index(ring_.pow(x, static_cast<std::uint64_t>(ell)))] = true;
    }
}

bool PowerResidueTable::is_power(const IntVec& a) const
{
    ResidueRing::Residue r = ring_.reduce(a);
    if (!ring_.is_unit(r)) throw InvalidInput("power test needs a residue coprime to the modulus");
    return powers_[ring_.index(r)];
}

std::shared_ptr<const PowerResidueTable> power_table(const Ideal& m, int ell)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const PowerResidueTable>> cache;
    const std::string key = m.field().polynomial().str() + "|" + m.key() + "|" + std::to_string(ell);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const PowerResidueTable>(m, ell);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

bool is_power_class(const IntVec& a, const Ideal& depth, int ell)
{
    if (depth.is_unit()) return true;
    return power_table(depth, ell)->is_power(a);
}

}  // namespace nfk
