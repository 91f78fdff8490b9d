#pragma once

#include "nfk/abelian_group.hpp"
#include "nfk/ideal.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace nfk {

/// O_K / m with residues as box coordinates 0 <= x_i < h_ii of the HNF.
class ResidueRing {
public:
    using Residue = std::vector<std::int64_t>;

    explicit ResidueRing(const Ideal& m, std::uint64_t ceiling = Ceilings::defaults().residue_norm);

    const Ideal& modulus() const { return m_; }
    std::uint64_t size() const { return size_; }
    Residue one() const { return reduce_small(unit_vector()); }
    Residue reduce(const IntVec& a) const;
    Residue mul(const Residue& a, const Residue& b) const;
    Residue pow(Residue a, std::uint64_t e) const;
    std::uint64_t index(const Residue& a) const;
    Residue residue(std::uint64_t index) const;
    IntVec lift(const Residue& a) const;
    /// a is invertible modulo m.
    bool is_unit(const Residue& a) const;
    /// Primes dividing m.
    const std::vector<PrimeIdeal>& primes() const { return primes_; }

private:
    Residue unit_vector() const;
    Residue reduce_small(Residue x) const;
    static Residue reduce_with(Residue x, const std::vector<std::vector<std::int64_t>>& h, std::int64_t m0);

    Ideal m_;
    std::size_t n_;
    std::uint64_t size_;
    std::int64_t m0_;
    std::vector<std::vector<std::int64_t>> h_;                // h_[r][c]
    std::vector<std::vector<std::vector<std::int64_t>>> basis_mult_;  // t^i as matrices mod m0
    std::vector<PrimeIdeal> primes_;
    std::vector<std::vector<std::vector<std::int64_t>>> prime_h_;
    std::vector<std::int64_t> prime_m0_;
};

/// (O_K/m)^x with structure from greedy generator extraction and a full
/// discrete-log table.
class ResidueUnitGroup {
public:
    explicit ResidueUnitGroup(const Ideal& m, std::uint64_t ceiling = Ceilings::defaults().residue_norm);

    const ResidueRing& ring() const { return ring_; }
    const FiniteAbelianGroup& group() const { return presented_->group(); }
    /// Discrete log of a unit residue (throws for non-units).
    FiniteAbelianGroup::Element dlog(const ResidueRing::Residue& a) const;
    FiniteAbelianGroup::Element dlog(const IntVec& a) const { return dlog(ring_.reduce(a)); }
    /// Unit residues in index order.
    std::vector<ResidueRing::Residue> units() const;
    const std::vector<ResidueRing::Residue>& generators() const { return gens_; }

private:
    ResidueRing ring_;
    std::vector<std::uint32_t> table_;  // greedy mixed-radix coordinates, or kNone
    std::vector<long> radix_;
    std::vector<ResidueRing::Residue> gens_;
    std::unique_ptr<PresentedGroup> presented_;
};

ResidueUnitGroup unit_group_mod_ideal(const Ideal& m, std::uint64_t ceiling = Ceilings::defaults().residue_norm);

/// Bit table of the ell-th powers among units of O_K / m.
class PowerResidueTable {
public:
    PowerResidueTable(const Ideal& m, int ell, std::uint64_t ceiling = Ceilings::defaults().residue_norm);
    const ResidueRing& ring() const { return ring_; }
    /// Requires a coprime to m.
    bool is_power(const IntVec& a) const;

private:
    ResidueRing ring_;
    std::vector<bool> powers_;
};

/// Shared cached table for (m, ell).
std::shared_ptr<const PowerResidueTable> power_table(const Ideal& m, int ell);

/// Is a an ell-th power modulo `depth` (an ideal power q^s)?  a must be coprime to it.
bool is_power_class(const IntVec& a, const Ideal& depth, int ell);

}  // namespace nfk
