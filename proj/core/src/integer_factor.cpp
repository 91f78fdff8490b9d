#include "nfk/integer_factor.hpp"
#include "nfk/error.hpp"

#include <algorithm>
#include <map>

namespace nfk {

bool is_prime(const BigInt& n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(std::uint64_t n) { return is_prime(from_uint64(n)); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

bool exact_root(const BigInt& n, unsigned k, BigInt& root)
{
    if (k == 0) throw InvalidInput("zeroth root");
    if (n < 0 && k % 2 == 0) return false;
    BigInt a = abs(n);
    BigInt r;
    const bool exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) != 0;
    if (!exact) return false;
    root = n < 0 ? BigInt(-r) : r;
    return true;
}

BigInt root_floor(const BigInt& n, unsigned k)
{
    if (k == 0) throw InvalidInput("zeroth root");
    if (n < 0) throw InvalidInput("root of a negative number");
    BigInt r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

namespace {

BigInt pollard_brent(const BigInt& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const BigInt& v) {
            BigInt t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(BigInt(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(BigInt(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const BigInt& n, std::map<BigInt, int>& acc)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    for (unsigned k = 2; k < 64; ++k) {
        BigInt r;
        if (mpz_sizeinbase(n.get_mpz_t(), 2) < k) break;
        if (exact_root(n, k, r)) {
            std::map<BigInt, int> sub;
            split(r, sub);
            for (auto& [p, e] : sub) acc[p] += e * static_cast<int>(k);
            return;
        }
    }
    BigInt d = pollard_brent(n);
    split(d, acc);
    split(BigInt(n / d), acc);
}

}  // namespace

std::vector<PrimePower> factor_integer(const BigInt& n)
{
    if (n == 0) throw InvalidInput("factorization of zero");
    BigInt m = abs(n);
    std::map<BigInt, int> acc;
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++acc[BigInt(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    split(m, acc);
    std::vector<PrimePower> out;
    for (auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

}  // namespace nfk
