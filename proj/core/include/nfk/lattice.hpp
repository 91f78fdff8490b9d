#pragma once

#include "nfk/number_field.hpp"

#include <cstdint>
#include <functional>

namespace nfk {

/// Enumerates elements of a full-rank sublattice of O_K (given by basis
/// columns in power-basis coordinates) by their T2 length, using
/// Fincke-Pohst on an LLL-reduced basis.  Reusable across bounds.
class ShortElementEnumerator {
public:
    /// visit(coords, t2) returns false to stop the enumeration early.
    using Visitor = std::function<bool(const IntVec&, long double)>;

    ShortElementEnumerator(const NumberField& field, const IntMatrix& basis);

    /// Visits every nonzero element with T2 <= bound (up to a tiny relative
    /// slack; callers do exact checks).  With half = true only one of each
    /// pair +-x is visited.  Returns the number of nodes explored; throws
    /// CeilingExceeded past `ceiling` nodes.
    std::uint64_t enumerate(long double bound, const Visitor& visit, std::uint64_t ceiling, bool half = true) const;

    /// The reduced basis (columns).
    const IntMatrix& reduced_basis() const { return reduced_; }
    /// Smallest T2 among reduced basis vectors.
    long double first_minimum_estimate() const;

private:
    NumberField field_;
    IntMatrix reduced_;
    std::size_t n_;
    std::vector<std::vector<long double>> q_;  // Cholesky-style quadratic form
};

}  // namespace nfk
