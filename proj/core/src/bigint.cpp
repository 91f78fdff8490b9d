#include "nfk/bigint.hpp"
#include "nfk/error.hpp"

#include <cstdlib>
#include <limits>

namespace nfk {

std::string to_string(const BigRational& q)
{
    BigRational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(std::string_view text)
{
    std::string s(text);
    BigRational q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v)
{
    BigInt g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt pow(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRational pow(const BigRational& base, long exp)
{
    BigRational b = base;
    if (exp < 0) {
        if (b == 0) throw InvalidInput("zero to a negative power");
        b = 1 / b;
        exp = -exp;
    }
    BigRational r(pow(b.get_num(), static_cast<unsigned long>(exp)),
                  pow(b.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

std::int64_t to_int64(const BigInt& z)
{
    if (!z.fits_slong_p()) throw InvariantViolation("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

std::uint64_t to_uint64(const BigInt& z)
{
    if (z < 0 || !z.fits_ulong_p()) throw InvariantViolation("integer does not fit in u64: " + z.get_str());
    return z.get_ui();
}

BigInt from_uint64(std::uint64_t v)
{
    static_assert(sizeof(unsigned long) == 8);
    return BigInt(static_cast<unsigned long>(v));
}

Ceilings Ceilings::from_env()
{
    Ceilings c;
    if (const char* env = std::getenv("NFK_CEILING")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) c.lattice_points = v;
    }
    return c;
}

namespace {

Ceilings& process_ceilings()
{
    static Ceilings c = Ceilings::from_env();
    return c;
}

}  // namespace

const Ceilings& Ceilings::defaults() { return process_ceilings(); }

void Ceilings::set_defaults(const Ceilings& c) { process_ceilings() = c; }

}  // namespace nfk
