#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nfk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed spec files, reducible polynomials, wrong field.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// The field is outside what this library handles (non-monogenic, rank > 2, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A configured search or enumeration ceiling was hit before an answer was certain.
class CeilingExceeded : public Error {
public:
    CeilingExceeded(const std::string& what, std::uint64_t bound)
        : Error(what + " (ceiling " + std::to_string(bound) + ")"), bound_(bound) {}
    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t bound_;
};

/// Something that the mathematics guarantees did not hold; always a bug upstream.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Search ceilings shared by every module. NFK_CEILING overrides lattice_points.
struct Ceilings {
    std::uint64_t lattice_points = 10'000'000;   // principality / generator searches
    std::uint64_t residue_norm = 1'000'000;      // largest N(m) for (O_K/m)^x
    std::uint64_t product_tuples = 10'000'000;   // product_distribution_check
    std::uint64_t census_norm = 10'000'000;      // squarefree ideal censuses
    std::uint64_t minkowski_norm = 100'000;      // class group census

    static Ceilings from_env();
    /// from_env() on first use; replaced by set_defaults.
    static const Ceilings& defaults();
    /// Call before any computation starts; not synchronized.
    static void set_defaults(const Ceilings& c);
};

}  // namespace nfk
