#pragma once

#include "nfk/error.hpp"
#include "nfk/number_field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfk {

/// Nonzero integral ideal of O_K as an n x n column HNF over the power basis.
class Ideal {
public:
    /// h must already be a square HNF in the project convention.
    Ideal(NumberField field, IntMatrix h);

    static Ideal unit(const NumberField& field);
    static Ideal from_integer(const NumberField& field, const BigInt& c);
    /// The principal ideal a O_K; throws for a = 0.
    static Ideal from_element(const NumberField& field, const IntVec& a);
    /// The O_K-ideal generated by gens (not all zero).
    static Ideal from_generators(const NumberField& field, const std::vector<IntVec>& gens);

    const NumberField& field() const { return field_; }
    const IntMatrix& hnf() const { return h_; }
    const BigInt& norm() const { return norm_; }
    /// Positive generator of I cap Z.
    const BigInt& min_integer() const { return h_(0, 0); }
    bool is_unit() const { return norm_ == 1; }
    bool contains(const IntVec& a) const;
    /// this | other, i.e. other is contained in this.
    bool divides(const Ideal& other) const;
    /// gcd of all HNF entries: the largest c with I inside c O_K.
    BigInt content() const;
    /// Exact division by a rational integer dividing the content.
    Ideal divide_exact(const BigInt& c) const;
    std::string key() const;

    friend Ideal operator*(const Ideal& a, const Ideal& b);
    friend bool operator==(const Ideal& a, const Ideal& b) { return a.h_ == b.h_; }
    friend bool operator<(const Ideal& a, const Ideal& b);

private:
    NumberField field_;
    IntMatrix h_;
    BigInt norm_;
};

Ideal ideal_gcd(const Ideal& a, const Ideal& b);
Ideal ideal_pow(const Ideal& a, unsigned k);

/// HNF of the full-rank lattice spanned by `gens`; d must be a positive multiple
/// of its determinant (the index in Z^n).
IntMatrix hnf_mod_d(std::vector<IntVec> gens, const BigInt& d, std::size_t n);

/// Prime ideal (p, g(t)) from a factor g of f mod p.
class PrimeIdeal {
public:
    const BigInt& p() const { return d_->p; }
    int e() const { return d_->e; }
    int f() const { return d_->f; }
    BigInt norm() const;
    const Ideal& ideal() const { return d_->ideal; }
    /// Second generator g(t).
    const IntVec& second_generator() const { return d_->gen; }
    /// Position among the primes above p in canonical order.
    int index() const { return d_->index; }
    /// "p,f,e", with "#i" appended when another prime above p shares (f, e).
    const std::string& label() const { return d_->label; }
    /// "q[p=2,f=3]" style name used in reports.
    std::string str() const;
    bool divides_integer(const BigInt& ell) const;

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b);
    /// Canonical order: p, then residue degree, then the factor coefficients.
    friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);

private:
    friend const std::vector<PrimeIdeal>& primes_above(const NumberField& field, const BigInt& p);
    friend int valuation(const NumberField& field, const IntVec& a, const PrimeIdeal& q);
    struct Data {
        BigInt p;
        int e = 0, f = 0;
        ModPoly factor;
        Ideal ideal;
        IntVec gen;
        IntVec anti;  // h(t) with h * g = f mod p: x in P iff x h in p O_K
        int index = 0;
        std::string label;
    };
    explicit PrimeIdeal(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Primes above p in canonical order (cached per field).
const std::vector<PrimeIdeal>& primes_above(const NumberField& field, const BigInt& p);
/// All primes of norm <= bound, ordered by norm then canonically.
std::vector<PrimeIdeal> primes_up_to_norm(const NumberField& field, const BigInt& bound);

/// Product of prime powers with integer exponents (negative allowed).
class FactoredIdeal {
public:
    explicit FactoredIdeal(NumberField field) : field_(std::move(field)) {}
    FactoredIdeal(NumberField field, std::vector<std::pair<PrimeIdeal, int>> terms);

    const NumberField& field() const { return field_; }
    const std::vector<std::pair<PrimeIdeal, int>>& terms() const& { return terms_; }
    /// By value on temporaries, so range-for over factor_ideal(a).terms() is safe.
    std::vector<std::pair<PrimeIdeal, int>> terms() && { return std::move(terms_); }
    int exponent(const PrimeIdeal& q) const;
    void multiply_by(const PrimeIdeal& q, int e);
    bool is_one() const { return terms_.empty(); }
    bool integral() const;
    BigRational norm() const;
    /// Requires integral().
    Ideal to_ideal() const;
    FactoredIdeal pow(int k) const;
    FactoredIdeal inverse() const { return pow(-1); }
    std::string str() const;

    friend FactoredIdeal operator*(const FactoredIdeal& a, const FactoredIdeal& b);
    friend FactoredIdeal operator/(const FactoredIdeal& a, const FactoredIdeal& b);
    friend bool operator==(const FactoredIdeal& a, const FactoredIdeal& b);
    friend bool operator<(const FactoredIdeal& a, const FactoredIdeal& b);

private:
    NumberField field_;
    std::vector<std::pair<PrimeIdeal, int>> terms_;  // sorted, exponents nonzero
};

/// numerator / denominator, reduced so that no prime dividing the
/// denominator divides the numerator's content.
class FractionalIdeal {
public:
    explicit FractionalIdeal(Ideal numerator, BigInt denominator = 1);
    static FractionalIdeal from_factored(const FactoredIdeal& f);

    const Ideal& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    const NumberField& field() const { return num_.field(); }
    BigRational norm() const;
    bool integral() const { return den_ == 1; }
    FactoredIdeal factor() const;
    FractionalIdeal inverse() const;

    friend FractionalIdeal operator*(const FractionalIdeal& a, const FractionalIdeal& b);
    friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b)
    {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

private:
    Ideal num_;
    BigInt den_;
};

int valuation(const NumberField& field, const IntVec& a, const PrimeIdeal& q);
int valuation(const Ideal& a, const PrimeIdeal& q);
int valuation(const FractionalIdeal& a, const PrimeIdeal& q);

FactoredIdeal factor_ideal(const Ideal& a);
/// Factorization of a O_K directly from element valuations.
FactoredIdeal factor_element(const NumberField& field, const IntVec& a);
FactoredIdeal factor_integer_ideal(const NumberField& field, const BigInt& c);

/// a = Q * N^ell * prod_i I_i^i: Q is the full part above ell, the rest
/// is the ell-free part split by exponent residue mod ell.
struct PartsDecomposition {
    int ell = 0;
    FactoredIdeal ell_part;      // Q
    FactoredIdeal power_root;    // N
    std::vector<FactoredIdeal> power_parts;  // index i in 1..ell-1; entry 0 unused (trivial)
    FactoredIdeal support;       // s(a), radical
    FactoredIdeal reconstruct() const;
};
PartsDecomposition decompose_parts(const FactoredIdeal& a, int ell);
PartsDecomposition decompose_parts(const Ideal& a, int ell);

FactoredIdeal sqrt_of_square(const FactoredIdeal& a);
FractionalIdeal sqrt_of_square(const FractionalIdeal& a);

/// A generator when the ideal is principal.  The search is certified
/// complete using the unit lattice; throws CeilingExceeded past the ceiling.
std::optional<IntVec> principal_generator(const Ideal& a, std::uint64_t ceiling = Ceilings::defaults().lattice_points);
std::optional<AlgebraicNumber> principal_test_generator(const FractionalIdeal& a,
                                                        std::uint64_t ceiling = Ceilings::defaults().lattice_points);
/// Among all generators with minimal largest embedding magnitude, the one
/// with the smallest argument of its first embedding, then lexicographically
/// greatest coordinates.  Throws InvalidInput when
/// the ideal is not principal.
IntVec canonical_generator(const Ideal& a, std::uint64_t ceiling = Ceilings::defaults().lattice_points);

/// Evaluate an integer polynomial at t.
IntVec poly_to_element(const NumberField& field, const IntPolynomial& g);

}  // namespace nfk
