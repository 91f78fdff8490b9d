#pragma once

#include "nfk/error.hpp"
#include "nfk/number_field.hpp"

#include <vector>

namespace nfk {

/// O_K^x = <zeta> x <u_1, ..., u_r>.
class UnitGroup {
public:
    UnitGroup(NumberField field, IntVec torsion_generator, int torsion_order, std::vector<IntVec> fundamental,
              bool certified);

    const NumberField& field() const { return field_; }
    const IntVec& torsion_generator() const { return zeta_; }
    int torsion_order() const { return w_; }
    const std::vector<IntVec>& fundamental_units() const { return units_; }
    int rank() const { return static_cast<int>(units_.size()); }
    /// True when the fundamental system is proven (rank <= 1); rank 2 systems
    /// come from a heuristic search.
    bool certified() const { return certified_; }
    long double regulator() const { return regulator_; }
    /// Rows: units; columns: d_j log|sigma_j| for the r1 + r2 places (complex doubled).
    const std::vector<std::vector<long double>>& log_matrix() const { return logs_; }
    /// sum_j max_k |log|sigma_k(u_j)||/2: every principal ideal of norm N has a
    /// generator with all |sigma| <= N^{1/n} exp(slack).
    long double search_slack() const { return slack_; }

    bool is_unit(const IntVec& a) const;
    /// a = zeta^torsion * prod u_i^exponents[i]; throws if a is not a unit.
    struct Coordinates {
        int torsion = 0;
        std::vector<long> exponents;
    };
    Coordinates coordinates(const IntVec& a) const;
    /// zeta^t * prod u_i^e_i (negative exponents allowed).
    IntVec element(const Coordinates& c) const;

private:
    NumberField field_;
    IntVec zeta_;
    int w_;
    std::vector<IntVec> units_;
    bool certified_;
    long double regulator_ = 1;
    long double slack_ = 0;
    std::vector<std::vector<long double>> logs_;
    std::vector<IntVec> inverses_;
};

/// Torsion by T2 enumeration, fundamental units by log-lattice search.
/// Rank > 2 is Unsupported.
UnitGroup compute_unit_group(const NumberField& field, std::uint64_t ceiling = Ceilings::defaults().lattice_points);
/// Verifies the supplied units (norm +-1, independence, rank) and completes the torsion.
UnitGroup unit_group_from_known(const NumberField& field, const std::vector<IntVec>& units);

/// Cached per field; computed on first use unless one was installed.
const UnitGroup& unit_group(const NumberField& field);
void install_unit_group(const NumberField& field, const UnitGroup& units);

long double regulator(const UnitGroup& units);

/// U / U^ell: representatives zeta_ell-part^a * prod u_i^{b_i}, 0 <= a, b_i < ell,
/// listed with index a + ell (b_1 + ell (b_2 + ...)).
class UnitCosets {
public:
    UnitCosets(const UnitGroup& units, int ell);

    int ell() const { return ell_; }
    std::size_t size() const { return reps_.size(); }
    const std::vector<IntVec>& reps() const { return reps_; }
    const IntVec& rep(std::size_t i) const { return reps_[i]; }
    /// Index of the coset containing the unit a.
    std::size_t index_of(const IntVec& a) const;
    /// Index of the coset of rep(i)^m.
    std::size_t power_index(std::size_t i, int m) const;
    std::size_t product_index(std::size_t i, std::size_t j) const;

private:
    const UnitGroup* units_;
    int ell_;
    int zeta_step_;  // rep zeta = torsion_generator^zeta_step_
    std::vector<IntVec> reps_;
};

std::vector<IntVec> unit_coset_reps(const UnitGroup& units, int ell);

}  // namespace nfk
