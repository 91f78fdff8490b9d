#pragma once

#include "nfk/density.hpp"
#include "nfk/experiment.hpp"
#include "nfk/kummer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nfk {

enum class Format { json, csv, table };
Format parse_format(std::string_view name);

/// Field-independent view of a density report; what the JSON form carries.
struct DensityTable {
    std::string field;
    int ell = 0;
    struct Row {
        std::string ideal;
        std::string norm;
        BigRational rho;
        friend bool operator==(const Row&, const Row&) = default;
    };
    std::vector<Row> rows;
    BigRational total;
    std::optional<BigRational> identity;
    std::optional<BigRational> identity_expected;
    friend bool operator==(const DensityTable&, const DensityTable&) = default;
};
DensityTable density_table(const DensityReport& r);
/// Inverse of serialize(..., Format::json) on density reports.
DensityTable parse_density_json(std::string_view text);

/// Invariants printed by `nfk field`.
struct FieldInfo {
    std::string label;
    std::vector<BigInt> poly;
    int degree = 0;
    BigInt discriminant;
    int r1 = 0, r2 = 0;
    std::vector<long> class_group;  // elementary divisors
    std::uint64_t class_number = 1;
    int torsion_order = 2;
    IntVec torsion_generator;
    std::vector<IntVec> fundamental_units;
    bool units_certified = true;
    long double regulator = 1;
    BigRational minkowski_bound;
};
FieldInfo field_info(const NumberField& field);

/// Deterministic bytes: stable key order, rationals as "p/q", ideals as "q[p=2,f=3]^3".
/// Wall-clock times appear only in the table format.
std::string serialize(const DensityReport& r, Format f);
std::string serialize(const DensityTable& r, Format f);
std::string serialize(const ExperimentReport& r, Format f);
std::string serialize(const CountReport& r, Format f);
std::string serialize(const FieldInfo& info, Format f);
/// One record: a JSON line {"gamma", "disc_norm", "disc_factored", "steinitz"}, a CSV row or a table row.
std::string serialize(const ExtensionRecord& rec, Format f);
/// Header line for a record stream (empty for JSON).
std::string record_header(Format f);

std::string class_label(const FiniteAbelianGroup::Element& c);

}  // namespace nfk
