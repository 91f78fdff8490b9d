#include "nfk/abelian_group.hpp"

#include <numeric>
#include <sstream>

namespace nfk {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> divisors)
{
    for (long d : divisors) {
        if (d < 1) throw InvalidInput("group divisors must be positive");
        if (d > 1) d_.push_back(d);
    }
    for (std::size_t i = 1; i < d_.size(); ++i)
        if (d_[i] % d_[i - 1] != 0) throw InvalidInput("group divisors must form a divisibility chain");
}

std::uint64_t FiniteAbelianGroup::order() const
{
    std::uint64_t o = 1;
    for (long d : d_) o *= static_cast<std::uint64_t>(d);
    return o;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(Element x) const
{
    if (x.size() != d_.size()) throw DimensionError("group element has the wrong length");
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] %= d_[i];
        if (x[i] < 0) x[i] += d_[i];
    }
    return x;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const
{
    Element r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= d_[i]) r[i] -= d_[i];
    }
    return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::sub(const Element& a, const Element& b) const
{
    Element r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += d_[i];
    }
    return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(const Element& a) const { return sub(identity(), a); }

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(const Element& a, long k) const
{
    Element r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        __int128 v = static_cast<__int128>(a[i]) * k % d_[i];
        if (v < 0) v += d_[i];
        r[i] = static_cast<long>(v);
    }
    return r;
}

bool FiniteAbelianGroup::is_identity(const Element& a) const
{
    for (long x : a)
        if (x != 0) return false;
    return true;
}

long FiniteAbelianGroup::order_of(const Element& a) const
{
    long o = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long oi = d_[i] / std::gcd(d_[i], a[i]);
        o = std::lcm(o, oi);
    }
    return o;
}

std::uint64_t FiniteAbelianGroup::index(const Element& a) const
{
    std::uint64_t idx = 0;
    for (std::size_t i = d_.size(); i-- > 0;) idx = idx * static_cast<std::uint64_t>(d_[i]) + static_cast<std::uint64_t>(a[i]);
    return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(std::uint64_t index) const
{
    Element e(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) {
        e[i] = static_cast<long>(index % static_cast<std::uint64_t>(d_[i]));
        index /= static_cast<std::uint64_t>(d_[i]);
    }
    return e;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const
{
    std::vector<Element> out;
    const std::uint64_t n = order();
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element(i));
    return out;
}

std::string FiniteAbelianGroup::str() const
{
    if (d_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? " x " : "") << "Z/" << d_[i];
    return os.str();
}

PresentedGroup::PresentedGroup(const IntMatrix& relations) : k_(relations.rows())
{
    if (k_ == 0) {
        return;
    }
    SnfResult s = snf(relations);
    const std::size_t diag = std::min(s.d.rows(), s.d.cols());
    if (diag < k_) throw InvalidInput("relations do not present a finite group");
    std::vector<long> divisors;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < k_; ++i) {
        const BigInt& di = s.d(i, i);
        if (di == 0) throw InvalidInput("relations do not present a finite group");
        if (!di.fits_slong_p()) throw Unsupported("group too large");
        if (di != 1) {
            divisors.push_back(di.get_si());
            kept.push_back(i);
        }
    }
    group_ = FiniteAbelianGroup(divisors);
    for (std::size_t j = 0; j < k_; ++j) {
        FiniteAbelianGroup::Element e(kept.size());
        for (std::size_t t = 0; t < kept.size(); ++t) {
            BigInt v = floor_mod(s.u(kept[t], j), BigInt(divisors[t]));
            e[t] = v.get_si();
        }
        gen_images_.push_back(std::move(e));
    }
}

FiniteAbelianGroup::Element PresentedGroup::image(const std::vector<long>& exponents) const
{
    if (exponents.size() != k_) throw DimensionError("exponent vector has the wrong length");
    FiniteAbelianGroup::Element r = group_.identity();
    for (std::size_t j = 0; j < k_; ++j)
        if (exponents[j] != 0) r = group_.add(r, group_.scale(gen_images_[j], exponents[j]));
    return r;
}

PowerQuotient::PowerQuotient(const FiniteAbelianGroup& g, long ell)
{
    std::vector<long> divisors;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const long d = std::gcd(g.divisors()[i], ell);
        if (d > 1) {
            kept_.push_back(i);
            divisors.push_back(d);
        }
    }
    h_ = FiniteAbelianGroup(divisors);
}

FiniteAbelianGroup::Element PowerQuotient::project(const FiniteAbelianGroup::Element& x) const
{
    FiniteAbelianGroup::Element r(kept_.size());
    for (std::size_t t = 0; t < kept_.size(); ++t) r[t] = x[kept_[t]] % h_.divisors()[t];
    return r;
}

PowerQuotient quotient_by_powers(const FiniteAbelianGroup& g, long ell) { return PowerQuotient(g, ell); }

std::vector<std::uint64_t> product_distribution_check(const FiniteAbelianGroup& g, int n, std::uint64_t ceiling)
{
    if (n < 1) throw InvalidInput("product_distribution_check needs n >= 1");
    const std::uint64_t order = g.order();
    long double tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= static_cast<long double>(order);
    if (tuples > static_cast<long double>(ceiling)) throw CeilingExceeded("product distribution tuples", ceiling);

    // exact tally by successive convolution: after step j, counts[x] is the number
    // of (g_1..g_j) with g_1^2 ... g_j^{j+1} = x
    const auto elements = g.elements();
    std::vector<std::uint64_t> counts(order, 0);
    counts[g.index(g.identity())] = 1;
    for (int j = 1; j <= n; ++j) {
        std::vector<std::uint64_t> next(order, 0);
        std::vector<std::uint64_t> image(order);
        for (std::uint64_t y = 0; y < order; ++y) image[y] = g.index(g.scale(elements[y], j + 1));
        for (std::uint64_t x = 0; x < order; ++x) {
            if (counts[x] == 0) continue;
            for (std::uint64_t y = 0; y < order; ++y)
                next[g.index(g.add(elements[x], elements[image[y]]))] += counts[x];
        }
        counts = std::move(next);
    }
    return counts;
}

}  // namespace nfk
