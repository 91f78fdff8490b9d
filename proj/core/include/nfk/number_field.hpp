#pragma once

#include "nfk/bigint.hpp"
#include "nfk/int_matrix.hpp"
#include "nfk/polynomial.hpp"

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nfk {

/// Integer coordinates over the power basis 1, t, ..., t^{n-1}.
using IntVec = std::vector<BigInt>;
using Complex = std::complex<long double>;

long double to_long_double(const BigInt& z);

class AlgebraicNumber;

/// K = Q[x]/(f) with O_K = Z[t] verified.  Cheap to copy (shared immutable state).
class NumberField {
public:
    /// Checks monic, irreducible, maximal order; ell (if nonzero) must have zeta_ell in K.
    explicit NumberField(const IntPolynomial& f, int ell = 0, std::string label = {});

    const IntPolynomial& polynomial() const { return d_->poly; }
    int degree() const { return d_->n; }
    std::size_t dim() const { return static_cast<std::size_t>(d_->n); }
    const BigInt& discriminant() const { return d_->disc; }
    int r1() const { return d_->r1; }
    int r2() const { return d_->r2; }
    int unit_rank() const { return d_->r1 + d_->r2 - 1; }
    const std::string& label() const { return d_->label; }
    /// Only primes with (ell - 1) | n can qualify; others report false.
    bool contains_zeta(int ell) const;

    /// r1 real roots ascending, then one root of each complex pair (Im > 0).
    const std::vector<Complex>& roots() const { return d_->roots; }

    // -- integral element arithmetic on coordinate vectors --
    IntVec one() const;
    IntVec from_int(const BigInt& c) const;
    IntVec generator() const;  // t
    IntVec add(const IntVec& a, const IntVec& b) const;
    IntVec sub(const IntVec& a, const IntVec& b) const;
    IntVec mul(const IntVec& a, const IntVec& b) const;
    IntVec pow(const IntVec& a, unsigned long e) const;
    IntVec scale(const IntVec& a, const BigInt& c) const;
    bool is_zero(const IntVec& a) const;
    /// Column j holds a * t^j.
    IntMatrix mult_matrix(const IntVec& a) const;
    BigInt norm(const IntVec& a) const;
    BigInt trace(const IntVec& a) const;

    /// sigma_1..sigma_{r1+r2}(a).
    std::vector<Complex> embed(const IntVec& a) const;
    /// Real Minkowski vector of length n; its squared length is T2(a).
    std::vector<long double> minkowski(const IntVec& a) const;
    long double t2(const IntVec& a) const;
    /// log|sigma_i(a)| for the r1 + r2 places (not doubled).
    std::vector<long double> log_abs(const IntVec& a) const;
    long double max_abs_embedding(const IntVec& a) const;

    /// Exact rational upper estimate of (n!/n^n)(4/pi)^{r2} sqrt|d|.
    BigRational minkowski_bound() const;

    void require_same(const NumberField& other) const;

    /// Lazily filled per-field tables (prime decompositions, units, classes).
    struct Caches;
    Caches& caches() const { return *d_->caches; }
    bool same_as(const NumberField& other) const { return d_ == other.d_ || d_->poly == other.d_->poly; }

private:
    struct Data {
        IntPolynomial poly;
        int n = 0;
        BigInt disc;
        int r1 = 0, r2 = 0;
        std::vector<Complex> roots;
        std::vector<IntVec> reductions;  // t^{n+k} for k = 0..n-2
        std::map<int, bool> zeta;
        std::string label;
        std::shared_ptr<Caches> caches;
    };
    std::shared_ptr<const Data> d_;
};

/// Exact element of K: numerator coordinates over a positive common denominator.
class AlgebraicNumber {
public:
    AlgebraicNumber(NumberField field, IntVec numerator, BigInt denominator = 1);
    AlgebraicNumber(NumberField field, const std::vector<BigRational>& coords);
    static AlgebraicNumber from_int(const NumberField& field, const BigInt& c);

    const NumberField& field() const { return field_; }
    const IntVec& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    std::vector<BigRational> coords() const;
    bool is_integral() const { return den_ == 1; }
    bool is_zero() const { return field_.is_zero(num_); }

    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long e) const;
    BigRational norm() const;
    BigRational trace() const;
    /// precision in bits; values are exact to about half of it.  Supported up to 64.
    std::vector<Complex> embeddings(int precision = 64) const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

    std::string str() const;

private:
    void normalize();
    NumberField field_;
    IntVec num_;
    BigInt den_;
};

/// Solve M x = b over Q (M square, nonsingular).
std::vector<BigRational> solve_rational(const IntMatrix& m, const std::vector<BigRational>& b);

}  // namespace nfk
