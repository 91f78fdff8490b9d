#include "nfk/polynomial.hpp"
#include "nfk/error.hpp"
#include "nfk/int_matrix.hpp"
#include "nfk/integer_factor.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace nfk {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const
{
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::eval(const BigInt& x) const
{
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

BigRational IntPolynomial::eval(const BigRational& x) const
{
    BigRational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + BigRational(*it);
    return r;
}

IntPolynomial IntPolynomial::derivative() const
{
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str(const char* var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigInt c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (a != 1 || i == 0) os << a;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
        first = false;
    }
    return os.str();
}

BigInt discriminant(const IntPolynomial& f)
{
    const int n = f.degree();
    if (n < 1) throw InvalidInput("discriminant of a constant polynomial");
    if (n == 1) return 1;
    IntPolynomial g = f.derivative();
    const int m = g.degree();
    const std::size_t size = static_cast<std::size_t>(n + m);
    IntMatrix s(size, size);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = f.coeff(n - k);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s(static_cast<std::size_t>(m + r), static_cast<std::size_t>(r + k)) = g.coeff(m - k);
    BigInt res = det_int(s);
    BigInt d = res / f.leading();
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_rem(RatPoly a, const RatPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        BigRational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_real_roots(const IntPolynomial& f)
{
    if (f.degree() < 1) return 0;
    std::vector<RatPoly> seq;
    RatPoly p0, p1;
    for (const auto& c : f.coeffs()) p0.emplace_back(c);
    const IntPolynomial df = f.derivative();
    for (const auto& c : df.coeffs()) p1.emplace_back(c);
    seq.push_back(p0);
    seq.push_back(p1);
    while (!seq.back().empty()) {
        RatPoly r = rat_rem(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    std::vector<int> at_neg, at_pos;
    for (const auto& p : seq) {
        if (p.empty()) continue;
        const int lead = sgn(p.back());
        const int deg = static_cast<int>(p.size()) - 1;
        at_pos.push_back(lead);
        at_neg.push_back(deg % 2 == 0 ? lead : -lead);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

// ---------------- F_p arithmetic ----------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0) throw InvariantViolation("inverse of zero mod p");
    return powmod(a, p - 2, p);
}

namespace {

void trim(ModPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly make_monic(ModPoly f, std::uint64_t p)
{
    if (f.empty()) return f;
    const std::uint64_t inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

ModPoly sub(ModPoly a, const ModPoly& b, std::uint64_t p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

ModPoly derivative(const ModPoly& f, std::uint64_t p)
{
    ModPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
    trim(d);
    return d;
}

ModPoly mulmod_poly(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p)
{
    ModPoly rem;
    modpoly_divmod(modpoly_mul(a, b, p), m, p, rem);
    return rem;
}

ModPoly powmod_poly(ModPoly base, const BigInt& e, const ModPoly& m, std::uint64_t p)
{
    ModPoly r{1};
    ModPoly rem;
    modpoly_divmod(base, m, p, rem);
    base = rem;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod_poly(r, r, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod_poly(r, base, m, p);
    }
    return r;
}

ModPoly pth_root(const ModPoly& f, std::uint64_t p)
{
    ModPoly g;
    for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    trim(g);
    return g;
}

void squarefree(const ModPoly& f, std::uint64_t p, int mult, std::vector<std::pair<ModPoly, int>>& out)
{
    if (deg(f) <= 0) return;
    ModPoly fp = derivative(f, p);
    if (fp.empty()) {
        squarefree(pth_root(f, p), p, mult * static_cast<int>(p), out);
        return;
    }
    ModPoly rem;
    ModPoly c = modpoly_gcd(f, fp, p);
    ModPoly w = modpoly_divmod(f, c, p, rem);
    int i = 1;
    while (deg(w) > 0) {
        ModPoly y = modpoly_gcd(w, c, p);
        ModPoly z = modpoly_divmod(w, y, p, rem);
        if (deg(z) > 0) out.emplace_back(make_monic(z, p), i * mult);
        ++i;
        w = y;
        c = modpoly_divmod(c, y, p, rem);
    }
    if (deg(c) > 0) squarefree(pth_root(c, p), p, mult * static_cast<int>(p), out);
}

void equal_degree(const ModPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    BigInt pd = pow(from_uint64(p), static_cast<unsigned long>(d));
    for (;;) {
        ModPoly a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = coef(rng);
        trim(a);
        if (deg(a) <= 0) continue;
        ModPoly b;
        if (p == 2) {
            ModPoly term = a, rem;
            modpoly_divmod(term, g, p, rem);
            term = rem;
            b = term;
            for (int i = 1; i < d; ++i) {
                term = mulmod_poly(term, term, g, p);
                ModPoly s(std::max(b.size(), term.size()), 0);
                for (std::size_t k = 0; k < b.size(); ++k) s[k] ^= b[k];
                for (std::size_t k = 0; k < term.size(); ++k) s[k] ^= term[k];
                trim(s);
                b = s;
            }
        } else {
            BigInt e = (pd - 1) / 2;
            b = sub(powmod_poly(a, e, g, p), ModPoly{1}, p);
        }
        ModPoly c = modpoly_gcd(g, b, p);
        if (deg(c) > 0 && deg(c) < deg(g)) {
            ModPoly rem;
            ModPoly other = make_monic(modpoly_divmod(g, c, p, rem), p);
            equal_degree(make_monic(c, p), d, p, rng, out);
            equal_degree(other, d, p, rng, out);
            return;
        }
    }
}

}  // namespace

ModPoly reduce_mod_p(const IntPolynomial& f, std::uint64_t p)
{
    ModPoly r;
    const BigInt pp = from_uint64(p);
    for (const auto& c : f.coeffs()) r.push_back(floor_mod(c, pp).get_ui());
    trim(r);
    return r;
}

IntPolynomial lift(const ModPoly& f)
{
    std::vector<BigInt> c;
    for (auto v : f) c.push_back(from_uint64(v));
    return IntPolynomial(std::move(c));
}

ModPoly modpoly_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(c);
    return c;
}

ModPoly modpoly_divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly& rem)
{
    if (b.empty()) throw InvariantViolation("polynomial division by zero mod p");
    rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {};
    ModPoly q(rem.size() - b.size() + 1, 0);
    const std::uint64_t inv = invmod(b.back(), p);
    while (rem.size() >= b.size() && !rem.empty()) {
        const std::size_t shift = rem.size() - b.size();
        const std::uint64_t c = mulmod(rem.back(), inv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = (rem[shift + i] + p - mulmod(c, b[i], p)) % p;
        trim(rem);
    }
    trim(q);
    return q;
}

ModPoly modpoly_gcd(ModPoly a, ModPoly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r;
        modpoly_divmod(a, b, p, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

std::vector<ModFactor> factor_mod_p(const IntPolynomial& f, std::uint64_t p)
{
    ModPoly g = make_monic(reduce_mod_p(f, p), p);
    if (g.empty()) throw InvariantViolation("polynomial vanishes mod p");
    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree(g, p, 1, sqf);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    std::vector<ModFactor> out;
    for (auto& [s0, mult] : sqf) {
        ModPoly s = s0;
        ModPoly h{0, 1};  // x
        const ModPoly x{0, 1};
        for (int d = 1; 2 * d <= deg(s); ++d) {
            h = powmod_poly(h, from_uint64(p), s, p);
            ModPoly gg = modpoly_gcd(s, sub(h, x, p), p);
            if (deg(gg) > 0) {
                std::vector<ModPoly> pieces;
                equal_degree(gg, d, p, rng, pieces);
                for (auto& q : pieces) out.push_back({q, mult});
                ModPoly rem;
                s = make_monic(modpoly_divmod(s, gg, p, rem), p);
                modpoly_divmod(h, s, p, rem);
                h = rem;
            }
        }
        if (deg(s) > 0) out.push_back({s, mult});
    }
    // merge repeated irreducibles (possible across p-th-root recursion)
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
        return a.factor < b.factor;
    });
    std::vector<ModFactor> merged;
    for (auto& fac : out) {
        if (!merged.empty() && merged.back().factor == fac.factor) merged.back().exponent += fac.exponent;
        else merged.push_back(fac);
    }
    return merged;
}

bool certify_irreducible(const IntPolynomial& f, std::uint64_t prime_bound)
{
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    if (f.coeff(0) == 0) return false;
    // rational roots of a monic integer polynomial are integer divisors of f(0)
    {
        std::vector<BigInt> divisors{1};
        for (const auto& pp : factor_integer(f.coeff(0))) {
            const std::size_t base = divisors.size();
            BigInt pk = 1;
            for (int k = 1; k <= pp.exponent; ++k) {
                pk *= pp.prime;
                for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
            }
        }
        for (const auto& d : divisors)
            if (f.eval(d) == 0 || f.eval(BigInt(-d)) == 0) return false;
    }
    const BigInt disc = discriminant(f);
    if (disc == 0) return false;
    std::set<int> possible;
    for (int d = 1; d < n; ++d) possible.insert(d);
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        std::vector<ModFactor> fac = factor_mod_p(f, p);
        std::set<int> sums{0};
        for (const auto& mf : fac) {
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + deg(mf.factor));
            sums = std::move(next);
        }
        std::set<int> keep;
        for (int d : possible)
            if (sums.count(d)) keep.insert(d);
        possible = std::move(keep);
        if (possible.empty()) return true;
    }
    return false;
}

bool dedekind_maximal_at(const IntPolynomial& f, std::uint64_t p)
{
    std::vector<ModFactor> fac = factor_mod_p(f, p);
    ModPoly g{1}, h{1};
    for (const auto& mf : fac) {
        g = modpoly_mul(g, mf.factor, p);
        for (int k = 1; k < mf.exponent; ++k) h = modpoly_mul(h, mf.factor, p);
    }
    IntPolynomial diff = f - lift(g) * lift(h);
    std::vector<BigInt> q;
    for (const auto& c : diff.coeffs()) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), p)) throw InvariantViolation("Dedekind lift is not congruent mod p");
        q.push_back(c / from_uint64(p));
    }
    ModPoly fbar = reduce_mod_p(IntPolynomial(std::move(q)), p);
    ModPoly common = modpoly_gcd(g, h, p);
    if (fbar.empty()) return deg(common) == 0;
    return deg(modpoly_gcd(fbar, common, p)) == 0;
}

}  // namespace nfk
