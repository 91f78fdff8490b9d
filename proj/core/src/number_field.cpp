#include "nfk/number_field.hpp"
#include "nfk/error.hpp"
#include "nfk/integer_factor.hpp"
#include "nfk/lattice.hpp"
#include "field_caches.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nfk {

long double to_long_double(const BigInt& z)
{
    if (mpz_fits_slong_p(z.get_mpz_t())) return static_cast<long double>(z.get_si());
    const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    const std::size_t shift = bits - 63;
    BigInt top = abs(z) >> static_cast<mp_bitcnt_t>(shift);
    long double v = std::ldexp(static_cast<long double>(top.get_ui()), static_cast<int>(shift));
    return z < 0 ? -v : v;
}

namespace {

std::vector<Complex> polynomial_roots(const IntPolynomial& f, int r1)
{
    const int n = f.degree();
    std::vector<long double> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = to_long_double(f.coeff(i));
    auto eval = [&](Complex z, Complex& deriv) {
        Complex v = 0;
        deriv = 0;
        for (int i = n; i >= 0; --i) {
            deriv = deriv * z + v;
            v = v * z + c[static_cast<std::size_t>(i)];
        }
        return v;
    };
    if (n == 1) return {Complex(-c[0], 0)};

    long double radius = 1;
    for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::fabs(c[static_cast<std::size_t>(i)]));
    std::vector<Complex> z(static_cast<std::size_t>(n));
    const Complex seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * radius * 0.5L;

    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            Complex d;
            Complex v = eval(z[i], d);
            Complex denom = 1;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) denom *= z[i] - z[j];
            Complex step = v / denom;
            z[i] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (change < 1e-18L) break;
    }
    for (auto& zi : z) {
        for (int k = 0; k < 6; ++k) {
            Complex d;
            Complex v = eval(zi, d);
            if (std::abs(d) == 0) break;
            zi -= v / d;
        }
    }
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
    std::vector<Complex> real(z.begin(), z.begin() + r1), cplx;
    for (auto& r : real) r = Complex(r.real(), 0);
    for (std::size_t i = static_cast<std::size_t>(r1); i < z.size(); ++i)
        if (z[i].imag() > 0) cplx.push_back(z[i]);
    if (cplx.size() * 2 + real.size() != z.size()) throw InvariantViolation("root isolation failed to pair complex roots");
    std::sort(real.begin(), real.end(), [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
    std::sort(cplx.begin(), cplx.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    real.insert(real.end(), cplx.begin(), cplx.end());
    return real;
}

}  // namespace

NumberField::NumberField(const IntPolynomial& f, int ell, std::string label)
{
    auto data = std::make_shared<Data>();
    if (f.degree() < 1) throw InvalidInput("defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw InvalidInput("defining polynomial must be monic");
    if (!certify_irreducible(f)) throw InvalidInput("defining polynomial " + f.str() + " is not certified irreducible");
    data->poly = f;
    data->n = f.degree();
    data->label = std::move(label);
    data->caches = std::make_shared<Caches>();
    data->disc = nfk::discriminant(f);
    if (data->disc == 0) throw InvalidInput("zero discriminant");
    for (const auto& pp : factor_integer(data->disc)) {
        if (pp.exponent < 2) continue;
        if (!dedekind_maximal_at(f, pp.prime.get_ui()))
            throw Unsupported("non-monogenic field unsupported: Z[t] is not maximal at " + pp.prime.get_str());
    }
    data->r1 = count_real_roots(f);
    data->r2 = (data->n - data->r1) / 2;
    data->roots = polynomial_roots(f, data->r1);

    const std::size_t n = static_cast<std::size_t>(data->n);
    IntVec top(n);
    for (std::size_t i = 0; i < n; ++i) top[i] = -f.coeff(static_cast<int>(i));
    if (n >= 2) {
        data->reductions.push_back(top);
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const IntVec& prev = data->reductions.back();
            IntVec next(n);
            for (std::size_t i = 1; i < n; ++i) next[i] = prev[i - 1];
            for (std::size_t i = 0; i < n; ++i) next[i] += prev[n - 1] * top[i];
            data->reductions.push_back(next);
        }
    }
    d_ = data;

    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (p == 2) {
            data->zeta[p] = true;
            continue;
        }
        if (data->n % (p - 1) != 0) {
            data->zeta[p] = false;
            continue;
        }
        // roots of unity are exactly the elements with T2 = n; check candidates exactly
        bool found = false;
        ShortElementEnumerator search(*this, IntMatrix::identity(n));
        search.enumerate(
            static_cast<long double>(data->n) + 0.5L,
            [&](const IntVec& x, long double) {
                if (x == one()) return true;
                if (pow(x, static_cast<unsigned long>(p)) == one()) {
                    found = true;
                    return false;
                }
                return true;
            },
            Ceilings{}.lattice_points, false);
        data->zeta[p] = found;
    }
    if (ell != 0) {
        if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) throw InvalidInput("ell must be prime");
        if (!contains_zeta(ell)) throw InvalidInput("missing roots of unity: zeta_" + std::to_string(ell) + " is not in K");
    }
}

bool NumberField::contains_zeta(int ell) const
{
    auto it = d_->zeta.find(ell);
    if (it != d_->zeta.end()) return it->second;
    if (ell < 2 || d_->n % (ell - 1) != 0) return false;
    throw Unsupported("roots-of-unity test only precomputed for ell <= 13");
}

IntVec NumberField::one() const { return from_int(1); }

IntVec NumberField::from_int(const BigInt& c) const
{
    IntVec v(dim());
    v[0] = c;
    return v;
}

IntVec NumberField::generator() const
{
    if (d_->n == 1) return {-d_->poly.coeff(0)};
    IntVec v(dim());
    v[1] = 1;
    return v;
}

IntVec NumberField::add(const IntVec& a, const IntVec& b) const
{
    IntVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IntVec NumberField::sub(const IntVec& a, const IntVec& b) const
{
    IntVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IntVec NumberField::scale(const IntVec& a, const BigInt& c) const
{
    IntVec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool NumberField::is_zero(const IntVec& a) const
{
    return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; });
}

IntVec NumberField::mul(const IntVec& a, const IntVec& b) const
{
    const std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw DimensionError("element has wrong number of coordinates");
    if (n == 1) return {a[0] * b[0]};
    std::vector<BigInt> c(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    IntVec r(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const BigInt& coef = c[n + k];
        if (coef == 0) continue;
        const IntVec& red = d_->reductions[k];
        for (std::size_t i = 0; i < n; ++i) mpz_addmul(r[i].get_mpz_t(), coef.get_mpz_t(), red[i].get_mpz_t());
    }
    return r;
}

IntVec NumberField::pow(const IntVec& a, unsigned long e) const
{
    IntVec r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

IntMatrix NumberField::mult_matrix(const IntVec& a) const
{
    const std::size_t n = dim();
    IntMatrix m(n, n);
    IntVec col = a;
    const IntVec t = generator();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
        if (j + 1 < n) col = mul(col, t);
    }
    return m;
}

BigInt NumberField::norm(const IntVec& a) const
{
    if (dim() == 1) return a[0];
    if (dim() == 2) {
        // N(x + y t) for t^2 = -c1 t - c0: x^2 - c1 x y + c0 y^2
        const BigInt& c0 = d_->poly.coeff(0);
        const BigInt c1 = d_->poly.coeff(1);
        return a[0] * a[0] - c1 * a[0] * a[1] + c0 * a[1] * a[1];
    }
    return det_int(mult_matrix(a));
}

BigInt NumberField::trace(const IntVec& a) const
{
    IntMatrix m = mult_matrix(a);
    BigInt t = 0;
    for (std::size_t i = 0; i < dim(); ++i) t += m(i, i);
    return t;
}

std::vector<Complex> NumberField::embed(const IntVec& a) const
{
    const std::size_t places = static_cast<std::size_t>(d_->r1 + d_->r2);
    std::vector<Complex> out(places);
    std::vector<long double> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = to_long_double(a[i]);
    if (dim() == 1) {
        out[0] = Complex(c[0], 0);
        return out;
    }
    for (std::size_t k = 0; k < places; ++k) {
        const Complex z = d_->roots[k];
        Complex v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
        out[k] = k < static_cast<std::size_t>(d_->r1) ? Complex(v.real(), 0) : v;
    }
    return out;
}

std::vector<long double> NumberField::minkowski(const IntVec& a) const
{
    const std::vector<Complex> e = embed(a);
    std::vector<long double> v;
    v.reserve(dim());
    const long double s = std::sqrt(2.0L);
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k < static_cast<std::size_t>(d_->r1)) {
            v.push_back(e[k].real());
        } else {
            v.push_back(s * e[k].real());
            v.push_back(s * e[k].imag());
        }
    }
    return v;
}

long double NumberField::t2(const IntVec& a) const
{
    long double s = 0;
    for (long double x : minkowski(a)) s += x * x;
    return s;
}

std::vector<long double> NumberField::log_abs(const IntVec& a) const
{
    std::vector<long double> out;
    for (const auto& z : embed(a)) out.push_back(std::log(std::abs(z)));
    return out;
}

long double NumberField::max_abs_embedding(const IntVec& a) const
{
    long double m = 0;
    for (const auto& z : embed(a)) m = std::max(m, std::abs(z));
    return m;
}

BigRational NumberField::minkowski_bound() const
{
    const int n = d_->n;
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BigRational value(fact, nfk::pow(BigInt(n), static_cast<unsigned long>(n)));
    value.canonicalize();
    // pi > 3.141592653589793, so 4/pi < 4e15 / 3141592653589793
    const BigRational four_over_pi(BigInt("4000000000000000"), BigInt("3141592653589793"));
    for (int i = 0; i < d_->r2; ++i) value *= four_over_pi;
    const BigInt scale("10000000000");
    BigInt s;
    BigInt radicand = abs(d_->disc) * scale * scale;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
    value *= BigRational(s + 1, scale);
    value.canonicalize();
    const BigInt micro(1000000);
    BigInt scaled = value.get_num() * micro;
    BigInt up;
    mpz_cdiv_q(up.get_mpz_t(), scaled.get_mpz_t(), value.get_den().get_mpz_t());
    BigRational out(up, micro);
    out.canonicalize();
    return out;
}

void NumberField::require_same(const NumberField& other) const
{
    if (!same_as(other)) throw InvalidInput("elements or ideals from different fields");
}

// ---------------- AlgebraicNumber ----------------

AlgebraicNumber::AlgebraicNumber(NumberField field, IntVec numerator, BigInt denominator)
    : field_(std::move(field)), num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.size() != field_.dim()) throw DimensionError("element has wrong number of coordinates");
    if (den_ == 0) throw InvalidInput("zero denominator");
    normalize();
}

AlgebraicNumber::AlgebraicNumber(NumberField field, const std::vector<BigRational>& coords) : field_(std::move(field))
{
    if (coords.size() != field_.dim()) throw DimensionError("element has wrong number of coordinates");
    den_ = 1;
    for (const auto& c : coords) den_ = lcm(den_, c.get_den());
    for (const auto& c : coords) num_.push_back(c.get_num() * (den_ / c.get_den()));
    normalize();
}

AlgebraicNumber AlgebraicNumber::from_int(const NumberField& field, const BigInt& c)
{
    return AlgebraicNumber(field, field.from_int(c));
}

void AlgebraicNumber::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    BigInt g = den_;
    for (const auto& x : num_) g = gcd(g, x);
    if (g > 1) {
        den_ /= g;
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<BigRational> AlgebraicNumber::coords() const
{
    std::vector<BigRational> out;
    for (const auto& x : num_) {
        BigRational q(x, den_);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

AlgebraicNumber AlgebraicNumber::inverse() const
{
    if (is_zero()) throw InvalidInput("inverse of zero");
    std::vector<BigRational> e(field_.dim(), BigRational(0));
    e[0] = 1;
    std::vector<BigRational> x = solve_rational(field_.mult_matrix(num_), e);
    for (auto& c : x) c *= den_;
    return AlgebraicNumber(field_, x);
}

AlgebraicNumber AlgebraicNumber::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    const unsigned long ue = static_cast<unsigned long>(e);
    return AlgebraicNumber(field_, field_.pow(num_, ue), nfk::pow(den_, ue));
}

BigRational AlgebraicNumber::norm() const
{
    BigRational q(field_.norm(num_), nfk::pow(den_, field_.dim()));
    q.canonicalize();
    return q;
}

BigRational AlgebraicNumber::trace() const
{
    BigRational q(field_.trace(num_), den_);
    q.canonicalize();
    return q;
}

std::vector<Complex> AlgebraicNumber::embeddings(int precision) const
{
    if (precision < 1 || precision > 64) throw InvalidInput("embedding precision must be between 1 and 64 bits");
    std::vector<Complex> e = field_.embed(num_);
    const long double d = to_long_double(den_);
    for (auto& z : e) z /= d;
    return e;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    a.field_.require_same(b.field_);
    IntVec r(a.num_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    return AlgebraicNumber(a.field_, std::move(r), a.den_ * b.den_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    a.field_.require_same(b.field_);
    IntVec r(a.num_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.num_[i] * b.den_ - b.num_[i] * a.den_;
    return AlgebraicNumber(a.field_, std::move(r), a.den_ * b.den_);
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    a.field_.require_same(b.field_);
    return AlgebraicNumber(a.field_, a.field_.mul(a.num_, b.num_), a.den_ * b.den_);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    return a.field_.same_as(b.field_) && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string AlgebraicNumber::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < num_.size(); ++i) os << (i ? ", " : "") << num_[i];
    os << ']';
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

std::vector<BigRational> solve_rational(const IntMatrix& m, const std::vector<BigRational>& b)
{
    const std::size_t n = m.rows();
    if (!m.square() || b.size() != n) throw DimensionError("solve_rational needs a square system");
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InvalidInput("singular linear system");
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            BigRational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<BigRational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace nfk
