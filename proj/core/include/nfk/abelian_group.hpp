#pragma once

#include "nfk/error.hpp"
#include "nfk/int_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nfk {

/// Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
/// Elements are exponent vectors reduced into [0, d_i).
class FiniteAbelianGroup {
public:
    using Element = std::vector<long>;

    FiniteAbelianGroup() = default;
    /// Divisors equal to 1 are dropped; the rest must form a divisibility chain.
    explicit FiniteAbelianGroup(std::vector<long> divisors);

    const std::vector<long>& divisors() const { return d_; }
    std::size_t rank() const { return d_.size(); }
    std::uint64_t order() const;
    bool trivial() const { return d_.empty(); }

    Element identity() const { return Element(d_.size(), 0); }
    Element reduce(Element x) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(const Element& a, long k) const;
    bool is_identity(const Element& a) const;
    long order_of(const Element& a) const;

    /// Mixed-radix position of an element, 0 .. order()-1.
    std::uint64_t index(const Element& a) const;
    Element element(std::uint64_t index) const;
    std::vector<Element> elements() const;

    std::string str() const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) = default;

private:
    std::vector<long> d_;
};

/// Structure of Z^k / (column span of relations) with the map from Z^k.
/// The relations must have full rank k (finite quotient).
class PresentedGroup {
public:
    explicit PresentedGroup(const IntMatrix& relations);

    const FiniteAbelianGroup& group() const { return group_; }
    std::size_t generator_count() const { return k_; }
    /// Image of a vector of generator exponents.
    FiniteAbelianGroup::Element image(const std::vector<long>& exponents) const;
    /// Image of the j-th generator.
    const FiniteAbelianGroup::Element& generator_image(std::size_t j) const { return gen_images_[j]; }

private:
    FiniteAbelianGroup group_;
    std::size_t k_;
    std::vector<FiniteAbelianGroup::Element> gen_images_;
};

/// H = G / G^ell with the projection; #H = ell^{#{i : ell | d_i}}.
class PowerQuotient {
public:
    PowerQuotient(const FiniteAbelianGroup& g, long ell);

    const FiniteAbelianGroup& group() const { return h_; }
    FiniteAbelianGroup::Element project(const FiniteAbelianGroup::Element& x) const;

private:
    std::vector<std::size_t> kept_;
    FiniteAbelianGroup h_;
};

PowerQuotient quotient_by_powers(const FiniteAbelianGroup& g, long ell);

/// Tally of g_1^2 g_2^3 ... g_n^{n+1} over all n-tuples, indexed by element index.
std::vector<std::uint64_t> product_distribution_check(const FiniteAbelianGroup& g, int n,
                                                      std::uint64_t ceiling = Ceilings::defaults().product_tuples);

}  // namespace nfk
