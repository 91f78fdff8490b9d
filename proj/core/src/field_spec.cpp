#include "nfk/field_spec.hpp"
#include "nfk/class_group.hpp"
#include "nfk/unit_group.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nfk {

namespace {

using nlohmann::json;

BigInt to_bigint(const json& v)
{
    if (v.is_number_integer()) return BigInt(v.get<long>());
    if (v.is_string()) {
        BigInt z;
        if (z.set_str(v.get<std::string>(), 10) != 0) throw InvalidInput("bad integer: " + v.get<std::string>());
        return z;
    }
    throw InvalidInput("expected an integer, got " + v.dump());
}

IntVec to_vector(const json& v)
{
    if (!v.is_array()) throw InvalidInput("expected an array, got " + v.dump());
    IntVec out;
    for (const auto& c : v) out.push_back(to_bigint(c));
    return out;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("field spec: ") + e.what());
    }
    if (!j.is_object() || !j.contains("poly")) throw InvalidInput("field spec needs a \"poly\" array");
    FieldSpec s;
    s.poly = to_vector(j.at("poly"));
    if (s.poly.size() < 2 || s.poly.back() != 1) throw InvalidInput("field spec: polynomial must be monic of degree >= 1");
    if (j.contains("ell")) {
        if (!j.at("ell").is_number_integer()) throw InvalidInput("field spec: ell must be an integer");
        s.ell = j.at("ell").get<int>();
    }
    if (j.contains("label")) s.label = j.at("label").get<std::string>();
    if (j.contains("known_units")) {
        std::vector<IntVec> units;
        for (const auto& u : j.at("known_units")) units.push_back(to_vector(u));
        s.known_units = std::move(units);
    }
    if (j.contains("known_h")) {
        const long h = j.at("known_h").get<long>();
        if (h < 1) throw InvalidInput("field spec: known_h must be positive");
        s.known_h = static_cast<std::uint64_t>(h);
    }
    return s;
}

FieldSpec load_field_spec(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open field spec " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    FieldSpec s = parse_field_spec(text.str());
    if (s.label.empty()) s.label = path.stem().string();
    return s;
}

NumberField build_field(const FieldSpec& spec)
{
    NumberField field(IntPolynomial(spec.poly), spec.ell, spec.label);
    if (spec.known_units) {
        for (const auto& u : *spec.known_units)
            if (u.size() != field.dim()) throw InvalidInput("known unit has the wrong number of coordinates");
        install_unit_group(field, unit_group_from_known(field, *spec.known_units));
    }
    if (spec.known_h) install_class_group(field, compute_class_group(field, spec.known_h));
    return field;
}

}  // namespace nfk
