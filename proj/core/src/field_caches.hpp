#pragma once

#include "nfk/class_group.hpp"
#include "nfk/ideal.hpp"
#include "nfk/unit_group.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace nfk {

struct NumberField::Caches {
    std::mutex primes_mutex;
    std::map<BigInt, std::vector<PrimeIdeal>> primes;

    std::mutex units_mutex;
    std::shared_ptr<const UnitGroup> units;

    std::mutex class_mutex;
    std::shared_ptr<const ClassGroup> classes;
};

}  // namespace nfk
