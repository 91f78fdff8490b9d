#pragma once

#include "nfk/class_group.hpp"
#include "nfk/ideal.hpp"
#include "nfk/unit_group.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <string>

namespace nfk {

/// Identifies a normalized generator: (unit coset, class of the power root,
/// ell-part, ell-free ell-power-free part).
struct TupleKey {
    std::size_t unit = 0;
    std::uint64_t power_class = 0;
    std::string ell_part;
    std::string free_part;
    friend auto operator<=>(const TupleKey&, const TupleKey&) = default;
    friend bool operator==(const TupleKey&, const TupleKey&) = default;
    std::string str() const;
};

/// gamma = F(N^ell Q I) * u with N the fixed ell-free representative of its
/// class, Q ell-power-free above ell, I ell-free and ell-power-free.
struct KummerDatum {
    NumberField field;
    int ell = 0;
    IntVec gamma;
    FactoredIdeal factored;     // gamma O_K
    PartsDecomposition parts;   // of gamma O_K
    std::size_t unit_index = 0; // coset of u in U/U^ell
    ClassGroup::Element power_class;
    TupleKey key;
};

struct Discriminant {
    FactoredIdeal delta;
    FactoredIdeal ell_part;       // the part above ell
    FactoredIdeal ell_free_part;  // the rest
    BigInt norm;
};

struct SteinitzResult {
    FactoredIdeal ideal;  // the unique square root
    ClassGroup::Element cls;
};

struct TraceFormCheck {
    AlgebraicNumber formula;
    AlgebraicNumber determinant;
    bool agrees = false;
};

struct ExtensionRecord {
    KummerDatum datum;
    Discriminant discriminant;
    SteinitzResult steinitz;
    TupleKey orbit_key;  // least key over the gamma^m, 1 <= m < ell
};

struct EnumerationOptions {
    bool dedup = true;
};

/// Cyclic degree-ell extensions K(gamma^{1/ell}) over a fixed K: holds the
/// class group, unit group and U/U^ell needed by every computation.
class KummerField {
public:
    KummerField(NumberField field, int ell);

    const NumberField& field() const { return field_; }
    int ell() const { return ell_; }
    const ClassGroup& classes() const { return *classes_; }
    const UnitCosets& unit_cosets() const { return *cosets_; }
    /// Primes above ell in canonical order.
    const std::vector<PrimeIdeal>& ell_primes() const { return ell_primes_; }

    /// Throws InvalidInput for gamma = 0 and for ell-th powers ("degenerate extension").
    KummerDatum normalize(const IntVec& gamma) const;
    /// Same, with gamma O_K already known.
    KummerDatum normalize(const IntVec& gamma, const FactoredIdeal& factored) const;

    Discriminant relative_discriminant(const KummerDatum& d) const;
    SteinitzResult steinitz_class(const KummerDatum& d, const Discriminant& disc) const;
    /// Largest depth 1 <= s <= ell e(q)/(ell-1) with gamma an ell-th power mod q^s; gamma coprime to q.
    int power_depth(const IntVec& gamma, std::size_t prime_index) const;
    /// Exponent of q in the ell-part of a discriminant for each admissible depth pattern.
    std::vector<int> admissible_exponents(std::size_t prime_index) const;

    TupleKey orbit_key(const KummerDatum& d) const;
    bool is_isomorphic(const KummerDatum& a, const KummerDatum& b) const;
    /// Prop-style criterion on ideals only: equal ell-power-free parts of gamma_1^m
    /// and gamma_2 with matching power-part classes, for some m.  Ignores units.
    bool ideal_criterion(const KummerDatum& a, const KummerDatum& b) const;
    /// Exact test in K.
    bool is_ell_power(const AlgebraicNumber& x) const;

    /// Every extension with N(Delta) <= bound, in a deterministic order.
    void enumerate(const BigInt& bound, const std::function<void(const ExtensionRecord&)>& visit,
                   const EnumerationOptions& options = {}) const;
    std::vector<ExtensionRecord> collect(const BigInt& bound, const EnumerationOptions& options = {}) const;

    /// (ell-1)/2-th powers of Cl(K) (all of Cl(K) for ell = 2), as a membership table by index.
    std::vector<bool> realizable_classes() const;

private:
    ExtensionRecord make_record(KummerDatum d, Discriminant disc) const;
    KummerDatum datum_from_parts(const IntVec& generator, std::size_t unit, const ClassGroup::Element& cls,
                                 FactoredIdeal factored) const;

    NumberField field_;
    int ell_;
    std::shared_ptr<const ClassGroup> classes_;
    std::shared_ptr<const UnitGroup> units_;
    std::shared_ptr<UnitCosets> cosets_;
    std::vector<PrimeIdeal> ell_primes_;
    std::vector<std::vector<Ideal>> depth_ideals_;  // [q][m-1] = q^m
    std::vector<FactoredIdeal> class_reps_;         // ell-free, by class index
};

KummerDatum normalize_gamma(const NumberField& field, const IntVec& gamma, int ell);
Discriminant relative_discriminant(const KummerDatum& d);
/// -ell^ell gamma^{ell-1} (odd ell), 4 gamma (ell = 2), checked against the
/// determinant of the trace matrix on 1, a, ..., a^{ell-1} with a^ell = gamma.
TraceFormCheck trace_form_discriminant(const NumberField& field, const IntVec& gamma, int ell);
SteinitzResult steinitz_class(const KummerDatum& d, const ClassGroup& cg);
bool is_isomorphic(const KummerDatum& a, const KummerDatum& b);
std::vector<ExtensionRecord> enumerate_extensions(const NumberField& field, int ell, const BigInt& bound,
                                                  const EnumerationOptions& options = {});
/// Membership table over Cl(K) by element index.
std::vector<bool> realizable_class_subgroup(const ClassGroup& cg, int ell);

}  // namespace nfk
