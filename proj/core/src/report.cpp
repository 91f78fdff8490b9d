#include "nfk/report.hpp"
#include "nfk/class_group.hpp"
#include "nfk/unit_group.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nfk {

namespace {

using nlohmann::ordered_json;

ordered_json int_array(const std::vector<BigInt>& v)
{
    ordered_json a = ordered_json::array();
    for (const auto& c : v) {
        if (c.fits_slong_p())
            a.push_back(c.get_si());
        else
            a.push_back(c.get_str());
    }
    return a;
}

std::string rational(const BigRational& q) { return to_string(q); }

// CSV cells never contain quotes; ideals and classes contain commas.
std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    return "\"" + s + "\"";
}

std::string vector_str(const std::vector<BigInt>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + "]";
}

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    std::string str() const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], r[i].size());
            }
        std::ostringstream os;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            for (std::size_t i = 0; i < rows_[k].size(); ++i) {
                os << std::left << std::setw(static_cast<int>(width[i])) << rows_[k][i];
                if (i + 1 < rows_[k].size()) os << "  ";
            }
            os << '\n';
            if (k == 0) {
                std::size_t total = 0;
                for (auto w : width) total += w + 2;
                os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
            }
        }
        return os.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace

Format parse_format(std::string_view name)
{
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "table") return Format::table;
    throw InvalidInput("unknown format: " + std::string(name));
}

std::string class_label(const FiniteAbelianGroup::Element& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

DensityTable density_table(const DensityReport& r)
{
    DensityTable t;
    t.field = r.field;
    t.ell = r.ell;
    for (const auto& row : r.rows) t.rows.push_back({row.ideal.str(), row.norm.get_str(), row.rho});
    t.total = r.total;
    t.identity = r.identity;
    t.identity_expected = r.identity_expected;
    return t;
}

DensityTable parse_density_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
        DensityTable t;
        t.field = j.at("field").get<std::string>();
        t.ell = j.at("ell").get<int>();
        for (const auto& row : j.at("rows"))
            t.rows.push_back({row.at("Q").get<std::string>(), row.at("Q_norm").get<std::string>(),
                              parse_rational(row.at("rho").get<std::string>())});
        t.total = parse_rational(j.at("total").get<std::string>());
        if (j.contains("identity")) t.identity = parse_rational(j.at("identity").get<std::string>());
        if (j.contains("identity_expected"))
            t.identity_expected = parse_rational(j.at("identity_expected").get<std::string>());
        return t;
    } catch (const ordered_json::exception& e) {
        throw InvalidInput(std::string("density report: ") + e.what());
    }
}

std::string serialize(const DensityReport& r, Format f) { return serialize(density_table(r), f); }

std::string serialize(const DensityTable& r, Format f)
{
    switch (f) {
    case Format::json: {
        ordered_json j;
        j["field"] = r.field;
        j["ell"] = r.ell;
        j["rows"] = ordered_json::array();
        for (const auto& row : r.rows) j["rows"].push_back({{"Q", row.ideal}, {"Q_norm", row.norm}, {"rho", rational(row.rho)}});
        j["total"] = rational(r.total);
        if (r.identity) j["identity"] = rational(*r.identity);
        if (r.identity_expected) j["identity_expected"] = rational(*r.identity_expected);
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "Q_norm,Q,rho\n";
        for (const auto& row : r.rows) out += row.norm + "," + csv_cell(row.ideal) + "," + rational(row.rho) + "\n";
        return out;
    }
    case Format::table: {
        TextTable t({"Q", "N(Q)", "rho"});
        for (const auto& row : r.rows) t.add({row.ideal, row.norm, rational(row.rho)});
        std::string out = r.field + ", ell = " + std::to_string(r.ell) + "\n" + t.str();
        out += "sum rho = " + rational(r.total) + "\n";
        if (r.identity)
            out += "identity = " + rational(*r.identity) + " (expected " + rational(*r.identity_expected) + ")\n";
        return out;
    }
    }
    return {};
}

std::string serialize(const ExperimentReport& r, Format f)
{
    auto fraction = [](std::uint64_t a, std::uint64_t b) {
        if (b == 0) return std::string("0");
        BigRational q(BigInt(std::to_string(a)), BigInt(std::to_string(b)));
        q.canonicalize();
        return to_string(q);
    };
    std::size_t realizable = 0;
    for (bool b : r.realizable) realizable += b ? 1 : 0;
    switch (f) {
    case Format::json: {
        ordered_json j;
        j["field"] = r.field;
        j["ell"] = r.ell;
        j["bound"] = r.bound.get_str();
        j["classes"] = r.columns;
        ordered_json real = ordered_json::array();
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            if (r.realizable[i]) real.push_back(r.columns[i]);
        j["realizable"] = real;
        j["expected_fraction"] = fraction(1, realizable);
        j["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            ordered_json row;
            row["Q"] = r.rows[i].str();
            row["Q_norm"] = r.row_norms[i].get_str();
            row["counts"] = r.counts[i];
            row["total"] = r.row_totals[i];
            j["rows"].push_back(row);
        }
        j["column_totals"] = r.column_totals;
        ordered_json fr = ordered_json::array();
        for (auto c : r.column_totals) fr.push_back(fraction(c, r.total));
        j["column_fractions"] = fr;
        j["total"] = r.total;
        j["steinitz_checked"] = r.steinitz_checked;
        j["steinitz_failures"] = r.steinitz_failures;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "Q_norm,class,count,fraction,Q\n";
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            for (std::size_t c = 0; c < r.columns.size(); ++c)
                out += r.row_norms[i].get_str() + "," + csv_cell(r.columns[c]) + "," + std::to_string(r.counts[i][c]) +
                       "," + fraction(r.counts[i][c], r.row_totals[i]) + "," + csv_cell(r.rows[i].str()) + "\n";
        return out;
    }
    case Format::table: {
        std::vector<std::string> header{"Q", "N(Q)"};
        for (const auto& c : r.columns) header.push_back(c);
        header.push_back("total");
        TextTable t(header);
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            std::vector<std::string> row{r.rows[i].str(), r.row_norms[i].get_str()};
            for (auto c : r.counts[i]) row.push_back(std::to_string(c));
            row.push_back(std::to_string(r.row_totals[i]));
            t.add(row);
        }
        std::vector<std::string> last{"all", ""};
        for (auto c : r.column_totals) last.push_back(std::to_string(c));
        last.push_back(std::to_string(r.total));
        t.add(last);
        std::ostringstream os;
        os << r.field << ", ell = " << r.ell << ", N(Delta) <= " << r.bound.get_str() << "\n" << t.str();
        os << "expected fraction per realizable class: " << fraction(1, realizable) << "\n";
        os << "max column deviation: " << r.column_deviation << ", max row deviation: " << r.row_deviation << "\n";
        os << "Steinitz identity: " << r.steinitz_checked - r.steinitz_failures << "/" << r.steinitz_checked
           << " hold\n";
        os << "time: " << r.seconds << " s\n";
        return os.str();
    }
    }
    return {};
}

std::string serialize(const CountReport& r, Format f)
{
    std::ostringstream num;
    num << std::setprecision(10);
    auto real = [&](double x) {
        num.str({});
        num << x;
        return num.str();
    };
    switch (f) {
    case Format::json: {
        ordered_json j;
        j["field"] = r.field;
        j["bound"] = r.bound.get_str();
        j["count"] = r.count;
        j["closed_constant"] = real(r.closed_constant);
        j["product_constant"] = real(r.product_constant);
        j["closed_ratio"] = real(r.closed_ratio);
        j["product_ratio"] = real(r.product_ratio);
        j["identity"] = rational(r.identity);
        j["identity_expected"] = rational(r.identity_expected);
        return j.dump(2) + "\n";
    }
    case Format::csv:
        return "field,bound,count,closed_constant,product_constant,closed_ratio,product_ratio,identity\n" +
               csv_cell(r.field) + "," + r.bound.get_str() + "," + std::to_string(r.count) + "," +
               real(r.closed_constant) + "," + real(r.product_constant) + "," + real(r.closed_ratio) + "," +
               real(r.product_ratio) + "," + rational(r.identity) + "\n";
    case Format::table: {
        TextTable t({"quantity", "value"});
        t.add({"count", std::to_string(r.count)});
        t.add({"count / X", real(r.observed)});
        t.add({"Res/(2^r2 zeta(2))", real(r.closed_constant)});
        t.add({"product form", real(r.product_constant)});
        t.add({"ratio (closed)", real(r.closed_ratio)});
        t.add({"ratio (product)", real(r.product_ratio)});
        t.add({"identity", rational(r.identity) + " (expected " + rational(r.identity_expected) + ")"});
        t.add({"time (s)", real(r.seconds)});
        return r.field + ", X = " + r.bound.get_str() + "\n" + t.str();
    }
    }
    return {};
}

FieldInfo field_info(const NumberField& field)
{
    FieldInfo info;
    info.label = field.label();
    info.poly = field.polynomial().coeffs();
    info.degree = field.degree();
    info.discriminant = field.discriminant();
    info.r1 = field.r1();
    info.r2 = field.r2();
    const ClassGroup& cg = class_group(field);
    info.class_group = cg.group().divisors();
    info.class_number = cg.h();
    const UnitGroup& u = unit_group(field);
    info.torsion_order = u.torsion_order();
    info.torsion_generator = u.torsion_generator();
    info.fundamental_units = u.fundamental_units();
    info.units_certified = u.certified();
    info.regulator = u.regulator();
    info.minkowski_bound = field.minkowski_bound();
    return info;
}

std::string serialize(const FieldInfo& info, Format f)
{
    std::ostringstream reg;
    reg << std::setprecision(12) << static_cast<double>(info.regulator);
    std::ostringstream mink;
    mink << std::setprecision(8) << info.minkowski_bound.get_d();
    std::string cl = "[";
    for (std::size_t i = 0; i < info.class_group.size(); ++i) cl += (i ? "," : "") + std::to_string(info.class_group[i]);
    cl += "]";
    switch (f) {
    case Format::json: {
        ordered_json j;
        j["label"] = info.label;
        j["poly"] = int_array(info.poly);
        j["degree"] = info.degree;
        j["discriminant"] = info.discriminant.get_str();
        j["signature"] = {info.r1, info.r2};
        j["class_group"] = info.class_group;
        j["class_number"] = info.class_number;
        j["torsion_order"] = info.torsion_order;
        j["torsion_generator"] = int_array(info.torsion_generator);
        ordered_json units = ordered_json::array();
        for (const auto& u : info.fundamental_units) units.push_back(int_array(u));
        j["fundamental_units"] = units;
        j["units_certified"] = info.units_certified;
        j["regulator"] = reg.str();
        j["minkowski_bound"] = mink.str();
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::string units;
        for (std::size_t i = 0; i < info.fundamental_units.size(); ++i)
            units += (i ? " " : "") + vector_str(info.fundamental_units[i]);
        return "label,degree,discriminant,r1,r2,class_group,class_number,torsion_order,units,regulator,minkowski_bound\n" +
               csv_cell(info.label) + "," + std::to_string(info.degree) + "," + info.discriminant.get_str() + "," +
               std::to_string(info.r1) + "," + std::to_string(info.r2) + "," + csv_cell(cl) + "," +
               std::to_string(info.class_number) + "," + std::to_string(info.torsion_order) + "," + csv_cell(units) +
               "," + reg.str() + "," + mink.str() + "\n";
    }
    case Format::table: {
        TextTable t({"invariant", "value"});
        t.add({"polynomial", vector_str(info.poly)});
        t.add({"degree", std::to_string(info.degree)});
        t.add({"discriminant", info.discriminant.get_str()});
        t.add({"signature", "(" + std::to_string(info.r1) + "," + std::to_string(info.r2) + ")"});
        t.add({"class group", cl});
        t.add({"class number", std::to_string(info.class_number)});
        t.add({"roots of unity", std::to_string(info.torsion_order) + ", generator " + vector_str(info.torsion_generator)});
        for (std::size_t i = 0; i < info.fundamental_units.size(); ++i)
            t.add({"unit " + std::to_string(i + 1), vector_str(info.fundamental_units[i])});
        t.add({"regulator", reg.str() + (info.units_certified ? "" : " (not certified)")});
        t.add({"Minkowski bound", mink.str()});
        return info.label + "\n" + t.str();
    }
    }
    return {};
}

std::string record_header(Format f)
{
    switch (f) {
    case Format::json: return {};
    case Format::csv: return "gamma,disc_norm,disc_factored,steinitz\n";
    case Format::table: return TextTable({"gamma", "N(Delta)", "Delta", "St"}).str();
    }
    return {};
}

std::string serialize(const ExtensionRecord& rec, Format f)
{
    switch (f) {
    case Format::json: {
        ordered_json j;
        j["gamma"] = int_array(rec.datum.gamma);
        j["disc_norm"] = rec.discriminant.norm.get_str();
        ordered_json fac = ordered_json::array();
        for (const auto& [q, e] : rec.discriminant.delta.terms()) fac.push_back(ordered_json::array({q.label(), e}));
        j["disc_factored"] = fac;
        j["steinitz"] = rec.steinitz.cls;
        return j.dump() + "\n";
    }
    case Format::csv:
        return csv_cell(vector_str(rec.datum.gamma)) + "," + rec.discriminant.norm.get_str() + "," +
               csv_cell(rec.discriminant.delta.str()) + "," + csv_cell(class_label(rec.steinitz.cls)) + "\n";
    case Format::table:
        return vector_str(rec.datum.gamma) + "  " + rec.discriminant.norm.get_str() + "  " +
               rec.discriminant.delta.str() + "  " + class_label(rec.steinitz.cls) + "\n";
    }
    return {};
}

}  // namespace nfk
