#pragma once

#include "nfk/abelian_group.hpp"
#include "nfk/error.hpp"
#include "nfk/ideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace nfk {

/// Cl(K) with a class map on ideals.  Copies share the lazily grown prime table.
class ClassGroup {
public:
    using Element = FiniteAbelianGroup::Element;

    const NumberField& field() const { return field_; }
    const FiniteAbelianGroup& group() const { return group_; }
    std::uint64_t h() const { return group_.order(); }
    /// Primes of norm up to the Minkowski bound, in the order used for the presentation.
    const std::vector<PrimeIdeal>& generators() const { return gens_; }

    Element class_of(const PrimeIdeal& q) const;
    Element class_of(const FactoredIdeal& a) const;
    Element class_of(const Ideal& a) const;
    Element class_of(const FractionalIdeal& a) const;
    bool is_principal(const Ideal& a) const { return group_.is_identity(class_of(a)); }

    /// Smallest-norm integral ideal in the class (ties broken by HNF); O_K for the identity.
    Ideal representative(const Element& c) const;
    /// Same, restricted to ideals coprime to ell.
    Ideal ell_free_representative(const Element& c, int ell) const;

private:
    friend ClassGroup compute_class_group(const NumberField&, std::optional<std::uint64_t>, const Ceilings&);

    struct State {
        std::mutex mutex;
        std::map<PrimeIdeal, Element> prime_classes;
        std::map<std::uint64_t, Ideal> reps;
        std::map<std::uint64_t, FactoredIdeal> rep_conjugates;  // N(R) R^{-1}
        std::map<int, std::map<std::uint64_t, Ideal>> ell_free;
    };

    explicit ClassGroup(NumberField field) : field_(std::move(field)), state_(std::make_shared<State>()) {}
    std::map<std::uint64_t, Ideal> smallest_ideals(const std::vector<PrimeIdeal>& primes, const BigInt& bound) const;

    NumberField field_;
    FiniteAbelianGroup group_;
    std::vector<PrimeIdeal> gens_;
    std::shared_ptr<State> state_;
};

/// Census over primes of norm <= Minkowski bound; a supplied h is checked against the result.
ClassGroup compute_class_group(const NumberField& field, std::optional<std::uint64_t> known_h = std::nullopt,
                               const Ceilings& ceilings = Ceilings::defaults());

/// Cached per field.
const ClassGroup& class_group(const NumberField& field);
void install_class_group(const NumberField& field, const ClassGroup& group);

}  // namespace nfk
