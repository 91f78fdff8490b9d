#include "nfk/ideal.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/lattice.hpp"
#include "nfk/unit_group.hpp"
#include "field_caches.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nfk {

namespace {

void reduce_column(IntVec& v, const BigInt& r)
{
    for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t());
}

}  // namespace

IntMatrix hnf_mod_d(std::vector<IntVec> a, const BigInt& d, std::size_t n)
{
    if (d <= 0) throw InvalidInput("modular HNF needs a positive multiple of the index");
    while (a.size() < n) a.emplace_back(n);
    for (auto& col : a) reduce_column(col, d);
    BigInt r = d;
    std::vector<IntVec> w(n, IntVec(n));
    std::size_t k = a.size() - 1;
    BigInt u, v, g, x, y;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = k; j-- > 0;) {
            if (a[j][i] == 0) continue;
            g = xgcd(a[k][i], a[j][i], u, v);
            const BigInt ck = a[k][i] / g, cj = a[j][i] / g;
            for (std::size_t row = 0; row < n; ++row) {
                x = u * a[k][row] + v * a[j][row];
                y = ck * a[j][row] - cj * a[k][row];
                a[k][row] = x;
                a[j][row] = y;
            }
            reduce_column(a[j], r);
            reduce_column(a[k], r);
        }
        g = xgcd(a[k][i], r, u, v);
        w[i] = a[k];
        for (auto& e : w[i]) e *= u;
        reduce_column(w[i], r);
        if (w[i][i] == 0) w[i][i] = r;
        r /= g;
        if (i > 0) --k;
    }
    // reduce entries right of each pivot into [0, pivot)
    BigInt q;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = j; i-- > 0;) {
            mpz_fdiv_q(q.get_mpz_t(), w[j][i].get_mpz_t(), w[i][i].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t row = 0; row <= i; ++row) w[j][row] -= q * w[i][row];
        }
    return IntMatrix::from_columns(w, n);
}

// ---------------- Ideal ----------------

Ideal::Ideal(NumberField field, IntMatrix h) : field_(std::move(field)), h_(std::move(h))
{
    const std::size_t n = field_.dim();
    if (h_.rows() != n || h_.cols() != n) throw DimensionError("ideal basis must be n x n");
    norm_ = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (h_(i, i) <= 0) throw InvalidInput("ideal HNF needs positive pivots");
        norm_ *= h_(i, i);
    }
}

Ideal Ideal::unit(const NumberField& field) { return Ideal(field, IntMatrix::identity(field.dim())); }

Ideal Ideal::from_integer(const NumberField& field, const BigInt& c)
{
    if (c == 0) throw InvalidInput("zero ideal");
    std::vector<BigInt> d(field.dim(), abs(c));
    return Ideal(field, IntMatrix::diagonal(d));
}

Ideal Ideal::from_element(const NumberField& field, const IntVec& a)
{
    if (field.is_zero(a)) throw InvalidInput("ideal generated by zero");
    const std::size_t n = field.dim();
    if (n == 1) return from_integer(field, a[0]);
    IntMatrix m = field.mult_matrix(a);
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(m.column(j));
    BigInt d = abs(det_int(m));
    return Ideal(field, hnf_mod_d(std::move(cols), d, n));
}

Ideal Ideal::from_generators(const NumberField& field, const std::vector<IntVec>& gens)
{
    const std::size_t n = field.dim();
    BigInt d = 0;
    std::vector<IntVec> cols;
    for (const auto& g : gens) {
        if (field.is_zero(g)) continue;
        d = gcd(d, field.norm(g));
        IntMatrix m = field.mult_matrix(g);
        for (std::size_t j = 0; j < n; ++j) cols.push_back(m.column(j));
    }
    if (d == 0) throw InvalidInput("ideal generated by zero");
    return Ideal(field, hnf_mod_d(std::move(cols), abs(d), n));
}

bool Ideal::contains(const IntVec& a) const { return in_lattice_hnf(a, h_); }

bool Ideal::divides(const Ideal& other) const
{
    if (other.norm_ % norm_ != 0) return false;
    for (std::size_t j = 0; j < h_.cols(); ++j)
        if (!contains(other.h_.column(j))) return false;
    return true;
}

BigInt Ideal::content() const
{
    BigInt g = 0;
    for (std::size_t i = 0; i < h_.rows(); ++i)
        for (std::size_t j = i; j < h_.cols(); ++j) g = gcd(g, h_(i, j));
    return g;
}

Ideal Ideal::divide_exact(const BigInt& c) const
{
    IntMatrix h = h_;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (h(i, j) % c != 0) throw InvalidInput("ideal is not divisible by " + c.get_str());
            h(i, j) /= c;
        }
    return Ideal(field_, std::move(h));
}

std::string Ideal::key() const
{
    std::string s;
    for (std::size_t i = 0; i < h_.rows(); ++i)
        for (std::size_t j = i; j < h_.cols(); ++j) {
            s += h_(i, j).get_str();
            s += ',';
        }
    return s;
}

Ideal operator*(const Ideal& a, const Ideal& b)
{
    a.field_.require_same(b.field_);
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    const NumberField& k = a.field_;
    const std::size_t n = k.dim();
    if (n == 1) return Ideal::from_integer(k, a.norm_ * b.norm_);
    std::vector<IntVec> cols;
    cols.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec ai = a.h_.column(i);
        for (std::size_t j = 0; j < n; ++j) cols.push_back(k.mul(ai, b.h_.column(j)));
    }
    return Ideal(k, hnf_mod_d(std::move(cols), a.norm_ * b.norm_, n));
}

bool operator<(const Ideal& a, const Ideal& b)
{
    if (a.norm_ != b.norm_) return a.norm_ < b.norm_;
    for (std::size_t i = 0; i < a.h_.rows(); ++i)
        for (std::size_t j = i; j < a.h_.cols(); ++j)
            if (a.h_(i, j) != b.h_(i, j)) return a.h_(i, j) < b.h_(i, j);
    return false;
}

Ideal ideal_gcd(const Ideal& a, const Ideal& b)
{
    a.field().require_same(b.field());
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < a.hnf().cols(); ++j) cols.push_back(a.hnf().column(j));
    for (std::size_t j = 0; j < b.hnf().cols(); ++j) cols.push_back(b.hnf().column(j));
    return Ideal(a.field(), hnf_mod_d(std::move(cols), gcd(a.norm(), b.norm()), a.field().dim()));
}

Ideal ideal_pow(const Ideal& a, unsigned k)
{
    Ideal r = Ideal::unit(a.field());
    Ideal base = a;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

IntVec poly_to_element(const NumberField& field, const IntPolynomial& g)
{
    IntVec r(field.dim());
    const IntVec t = field.generator();
    for (int i = g.degree(); i >= 0; --i) {
        r = field.mul(r, t);
        r[0] += g.coeff(i);
    }
    return r;
}

// ---------------- primes ----------------

BigInt PrimeIdeal::norm() const { return nfk::pow(d_->p, static_cast<unsigned long>(d_->f)); }

std::string PrimeIdeal::str() const
{
    std::ostringstream os;
    os << "q[p=" << d_->p << ",f=" << d_->f;
    if (d_->e > 1) os << ",e=" << d_->e;
    const auto hash = d_->label.find('#');
    if (hash != std::string::npos) os << ',' << d_->label.substr(hash);
    os << ']';
    return os.str();
}

bool PrimeIdeal::divides_integer(const BigInt& ell) const { return ell % d_->p == 0; }

bool operator==(const PrimeIdeal& a, const PrimeIdeal& b)
{
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->factor == b.d_->factor);
}

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b)
{
    if (a.d_ == b.d_) return false;
    if (a.d_->p != b.d_->p) return a.d_->p < b.d_->p;
    if (a.d_->f != b.d_->f) return a.d_->f < b.d_->f;
    return a.d_->factor < b.d_->factor;
}

const std::vector<PrimeIdeal>& primes_above(const NumberField& field, const BigInt& p)
{
    auto& cache = field.caches();
    std::lock_guard lock(cache.primes_mutex);
    auto it = cache.primes.find(p);
    if (it != cache.primes.end()) return it->second;
    if (!is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
    if (!p.fits_ulong_p()) throw Unsupported("prime too large for splitting: " + p.get_str());
    const std::uint64_t pp = p.get_ui();
    const IntPolynomial& f = field.polynomial();
    const ModPoly fbar = reduce_mod_p(f, pp);
    std::vector<ModFactor> factors = factor_mod_p(f, pp);
    std::vector<PrimeIdeal::Data> data;
    int total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        PrimeIdeal::Data d{p, factors[i].exponent, static_cast<int>(factors[i].factor.size()) - 1, factors[i].factor,
                           Ideal::unit(field), {}, {}, static_cast<int>(i), {}};
        d.gen = poly_to_element(field, lift(d.factor));
        d.ideal = Ideal::from_generators(field, {field.from_int(p), d.gen});
        ModPoly rem;
        d.anti = poly_to_element(field, lift(modpoly_divmod(fbar, d.factor, pp, rem)));
        if (d.ideal.norm() != nfk::pow(p, static_cast<unsigned long>(d.f)))
            throw InvariantViolation("prime ideal above " + p.get_str() + " has the wrong norm");
        total += d.e * d.f;
        data.push_back(std::move(d));
    }
    if (total != field.degree()) throw InvariantViolation("sum of e f above " + p.get_str() + " differs from n");
    std::vector<PrimeIdeal> out;
    for (std::size_t i = 0; i < data.size(); ++i) {
        int same = 0, pos = 0;
        for (std::size_t j = 0; j < data.size(); ++j) {
            if (data[j].f == data[i].f && data[j].e == data[i].e) {
                if (j < i) ++pos;
                ++same;
            }
        }
        data[i].label = p.get_str() + "," + std::to_string(data[i].f) + "," + std::to_string(data[i].e);
        if (same > 1) data[i].label += "#" + std::to_string(pos);
    }
    for (auto& d : data) out.push_back(PrimeIdeal(std::make_shared<const PrimeIdeal::Data>(std::move(d))));
    return cache.primes.emplace(p, std::move(out)).first->second;
}

std::vector<PrimeIdeal> primes_up_to_norm(const NumberField& field, const BigInt& bound)
{
    std::vector<PrimeIdeal> out;
    if (bound < 2) return out;
    for (std::uint64_t p : primes_up_to(to_uint64(bound)))
        for (const auto& q : primes_above(field, from_uint64(p)))
            if (q.norm() <= bound) out.push_back(q);
    std::stable_sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        BigInt na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        return a < b;
    });
    return out;
}

int valuation(const NumberField& field, const IntVec& a, const PrimeIdeal& q)
{
    if (field.is_zero(a)) throw InvalidInput("valuation of zero");
    const BigInt& p = q.p();
    int v = 0;
    IntVec x = a;
    for (;;) {
        IntVec y = field.mul(x, q.d_->anti);
        for (const auto& c : y)
            if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) return v;
        for (auto& c : y) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        x = std::move(y);
        ++v;
    }
}

int valuation(const Ideal& a, const PrimeIdeal& q)
{
    if (a.norm() % q.p() != 0) return 0;
    int best = -1;
    for (std::size_t j = 0; j < a.hnf().cols() && best != 0; ++j) {
        int v = valuation(a.field(), a.hnf().column(j), q);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

int valuation(const FractionalIdeal& a, const PrimeIdeal& q)
{
    BigInt den = a.denominator();
    const unsigned long k = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), q.p().get_mpz_t());
    return valuation(a.numerator(), q) - static_cast<int>(k) * q.e();
}

// ---------------- factored ideals ----------------

FactoredIdeal::FactoredIdeal(NumberField field, std::vector<std::pair<PrimeIdeal, int>> terms)
    : field_(std::move(field))
{
    for (auto& [q, e] : terms) multiply_by(q, e);
}

int FactoredIdeal::exponent(const PrimeIdeal& q) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), q,
                               [](const auto& t, const PrimeIdeal& x) { return t.first < x; });
    if (it != terms_.end() && it->first == q) return it->second;
    return 0;
}

void FactoredIdeal::multiply_by(const PrimeIdeal& q, int e)
{
    if (e == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), q,
                               [](const auto& t, const PrimeIdeal& x) { return t.first < x; });
    if (it != terms_.end() && it->first == q) {
        it->second += e;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {q, e});
    }
}

bool FactoredIdeal::integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

BigRational FactoredIdeal::norm() const
{
    BigRational r = 1;
    for (const auto& [q, e] : terms_) r *= nfk::pow(BigRational(q.norm()), e);
    return r;
}

Ideal FactoredIdeal::to_ideal() const
{
    if (!integral()) throw InvalidInput("fractional ideal where an integral one is required");
    Ideal r = Ideal::unit(field_);
    for (const auto& [q, e] : terms_) r = r * ideal_pow(q.ideal(), static_cast<unsigned>(e));
    return r;
}

FactoredIdeal FactoredIdeal::pow(int k) const
{
    FactoredIdeal r(field_);
    if (k == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= k;
    return r;
}

std::string FactoredIdeal::str() const
{
    if (terms_.empty()) return "O_K";
    std::string s;
    for (const auto& [q, e] : terms_) {
        if (!s.empty()) s += " * ";
        s += q.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

FactoredIdeal operator*(const FactoredIdeal& a, const FactoredIdeal& b)
{
    FactoredIdeal r = a;
    for (const auto& [q, e] : b.terms_) r.multiply_by(q, e);
    return r;
}

FactoredIdeal operator/(const FactoredIdeal& a, const FactoredIdeal& b)
{
    FactoredIdeal r = a;
    for (const auto& [q, e] : b.terms_) r.multiply_by(q, -e);
    return r;
}

bool operator==(const FactoredIdeal& a, const FactoredIdeal& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
    return true;
}

bool operator<(const FactoredIdeal& a, const FactoredIdeal& b)
{
    const std::size_t m = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < m; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.first < y.first) return true;
        if (y.first < x.first) return false;
        if (x.second != y.second) return x.second < y.second;
    }
    return a.terms_.size() < b.terms_.size();
}

// ---------------- fractional ideals ----------------

FractionalIdeal::FractionalIdeal(Ideal numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_ <= 0) throw InvalidInput("fractional ideal denominator must be positive");
    BigInt g = gcd(den_, num_.content());
    if (g > 1) {
        num_ = num_.divide_exact(g);
        den_ /= g;
    }
}

FractionalIdeal FractionalIdeal::from_factored(const FactoredIdeal& f)
{
    const NumberField& field = f.field();
    std::map<BigInt, int> shift;  // rational prime -> k
    for (const auto& [q, e] : f.terms()) {
        if (e >= 0) continue;
        const int k = (-e + q.e() - 1) / q.e();
        int& cur = shift[q.p()];
        cur = std::max(cur, k);
    }
    FactoredIdeal num = f;
    BigInt den = 1;
    for (const auto& [p, k] : shift) {
        for (const auto& q : primes_above(field, p)) num.multiply_by(q, k * q.e());
        den *= nfk::pow(p, static_cast<unsigned long>(k));
    }
    return FractionalIdeal(num.to_ideal(), den);
}

BigRational FractionalIdeal::norm() const
{
    BigRational r(num_.norm(), nfk::pow(den_, field().dim()));
    r.canonicalize();
    return r;
}

FactoredIdeal FractionalIdeal::factor() const { return factor_ideal(num_) / factor_integer_ideal(field(), den_); }

FractionalIdeal FractionalIdeal::inverse() const { return from_factored(factor().inverse()); }

FractionalIdeal operator*(const FractionalIdeal& a, const FractionalIdeal& b)
{
    return FractionalIdeal(a.num_ * b.num_, a.den_ * b.den_);
}

FactoredIdeal factor_ideal(const Ideal& a)
{
    FactoredIdeal out(a.field());
    if (a.is_unit()) return out;
    for (const auto& pp : factor_integer(a.norm())) {
        int total = 0;
        for (const auto& q : primes_above(a.field(), pp.prime)) {
            const int v = valuation(a, q);
            out.multiply_by(q, v);
            total += v * q.f();
        }
        if (total != pp.exponent) throw InvariantViolation("ideal factorization does not account for the norm");
    }
    return out;
}

FactoredIdeal factor_element(const NumberField& field, const IntVec& a)
{
    FactoredIdeal out(field);
    const BigInt n = abs(field.norm(a));
    if (n == 0) throw InvalidInput("factorization of zero");
    if (n == 1) return out;
    for (const auto& pp : factor_integer(n)) {
        int total = 0;
        for (const auto& q : primes_above(field, pp.prime)) {
            const int v = valuation(field, a, q);
            out.multiply_by(q, v);
            total += v * q.f();
        }
        if (total != pp.exponent) throw InvariantViolation("element factorization does not account for the norm");
    }
    return out;
}

FactoredIdeal factor_integer_ideal(const NumberField& field, const BigInt& c)
{
    FactoredIdeal out(field);
    if (c == 0) throw InvalidInput("factorization of zero");
    for (const auto& pp : factor_integer(c))
        for (const auto& q : primes_above(field, pp.prime)) out.multiply_by(q, pp.exponent * q.e());
    return out;
}

// ---------------- part decompositions ----------------

FactoredIdeal PartsDecomposition::reconstruct() const
{
    FactoredIdeal r = ell_part * power_root.pow(ell);
    for (int i = 1; i < ell; ++i) r = r * power_parts[static_cast<std::size_t>(i)].pow(i);
    return r;
}

PartsDecomposition decompose_parts(const FactoredIdeal& a, int ell)
{
    if (ell < 2) throw InvalidInput("ell must be prime");
    if (!a.integral()) throw InvalidInput("decompose_parts needs an integral ideal");
    const NumberField& field = a.field();
    PartsDecomposition d{ell, FactoredIdeal(field), FactoredIdeal(field),
                         std::vector<FactoredIdeal>(static_cast<std::size_t>(ell), FactoredIdeal(field)),
                         FactoredIdeal(field)};
    const BigInt l(ell);
    for (const auto& [q, e] : a.terms()) {
        d.support.multiply_by(q, 1);
        if (q.divides_integer(l)) {
            d.ell_part.multiply_by(q, e);
            continue;
        }
        d.power_root.multiply_by(q, e / ell);
        if (e % ell != 0) d.power_parts[static_cast<std::size_t>(e % ell)].multiply_by(q, 1);
    }
    return d;
}

PartsDecomposition decompose_parts(const Ideal& a, int ell) { return decompose_parts(factor_ideal(a), ell); }

FactoredIdeal sqrt_of_square(const FactoredIdeal& a)
{
    FactoredIdeal r(a.field());
    for (const auto& [q, e] : a.terms()) {
        if (e % 2 != 0) throw InvalidInput("not a square: odd exponent at " + q.str());
        r.multiply_by(q, e / 2);
    }
    return r;
}

FractionalIdeal sqrt_of_square(const FractionalIdeal& a)
{
    return FractionalIdeal::from_factored(sqrt_of_square(a.factor()));
}

// ---------------- principal ideals ----------------

namespace {

// Position of the first embedding's argument, normalized into [0, 2 pi) with
// a small tolerance so that values a hair below 2 pi count as 0.
long double normalized_argument(const NumberField& field, const IntVec& a)
{
    const Complex z = field.embed(a)[0];
    long double t = std::atan2(z.imag(), z.real());
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    if (t < 0) t += two_pi;
    if (two_pi - t < 1e-12L) t = 0;
    return t;
}

bool norm_matches(const NumberField& field, const IntVec& x, const BigInt& target)
{
    if (field.dim() >= 3) {
        long double approx = 1;
        const auto e = field.embed(x);
        for (std::size_t k = 0; k < e.size(); ++k) {
            long double m = std::abs(e[k]);
            approx *= k < static_cast<std::size_t>(field.r1()) ? m : m * m;
        }
        const long double t = to_long_double(target);
        if (std::fabs(approx - t) > 0.5L + 1e-9L * t) return false;
    }
    return abs(field.norm(x)) == target;
}

}  // namespace

std::optional<IntVec> principal_generator(const Ideal& a, std::uint64_t ceiling)
{
    const NumberField& field = a.field();
    if (a.is_unit()) return field.one();
    if (field.dim() == 1) return field.from_int(a.norm());
    const long double n = static_cast<long double>(field.degree());
    const long double base = n * std::pow(to_long_double(a.norm()), 2.0L / n);
    const long double target = base * std::exp(2 * unit_group(field).search_slack());
    ShortElementEnumerator search(field, a.hnf());
    std::optional<IntVec> found;
    long double bound = base;
    for (;;) {
        bound = std::min(bound, target);
        search.enumerate(
            bound,
            [&](const IntVec& x, long double) {
                if (norm_matches(field, x, a.norm())) {
                    found = x;
                    return false;
                }
                return true;
            },
            ceiling);
        if (found || bound >= target) break;
        bound *= 2;
    }
    return found;
}

std::optional<AlgebraicNumber> principal_test_generator(const FractionalIdeal& a, std::uint64_t ceiling)
{
    auto g = principal_generator(a.numerator(), ceiling);
    if (!g) return std::nullopt;
    return AlgebraicNumber(a.field(), *g, a.denominator());
}

IntVec canonical_generator(const Ideal& a, std::uint64_t ceiling)
{
    const NumberField& field = a.field();
    if (field.dim() == 1) return field.from_int(a.norm());
    auto first = principal_generator(a, ceiling);
    if (!first) throw InvalidInput("ideal is not principal");

    IntVec best = *first;
    long double best_max = field.max_abs_embedding(best);
    long double best_arg = normalized_argument(field, best);
    auto consider = [&](const IntVec& x) {
        const long double m = field.max_abs_embedding(x);
        const long double tol = 1e-9L * best_max;
        if (m > best_max + tol) return;
        const long double arg = normalized_argument(field, x);
        if (m < best_max - tol) {
            best = x;
            best_max = m;
            best_arg = arg;
            return;
        }
        if (arg < best_arg - 1e-12L || (std::fabs(arg - best_arg) <= 1e-12L && x > best)) {
            best = x;
            best_arg = arg;
        }
    };
    ShortElementEnumerator search(field, a.hnf());
    const long double bound = static_cast<long double>(field.degree()) * best_max * best_max * (1 + 1e-9L);
    search.enumerate(
        bound,
        [&](const IntVec& x, long double) {
            if (!norm_matches(field, x, a.norm())) return true;
            consider(x);
            IntVec neg = x;
            for (auto& c : neg) c = -c;
            consider(neg);
            return true;
        },
        ceiling);
    return best;
}

}  // namespace nfk
