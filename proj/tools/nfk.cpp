// nfk: command-line driver for the Kummer/Steinitz library.

#include "nfk/density.hpp"
#include "nfk/experiment.hpp"
#include "nfk/field_spec.hpp"
#include "nfk/kummer.hpp"
#include "nfk/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, ceiling = 3 };

struct Options {
    std::string spec;
    std::optional<int> ell;
    std::string bound;
    std::string format = "table";
    unsigned jobs = 1;
    std::optional<std::uint64_t> ceiling;
    std::string gamma;
    bool no_dedup = false;
};

nfk::BigInt parse_bound(const std::string& text)
{
    nfk::BigInt b;
    if (text.empty()) throw nfk::InvalidInput("--bound is required for this command");
    if (b.set_str(text, 10) != 0 || b < 1) throw nfk::InvalidInput("--bound must be a positive integer");
    return b;
}

nfk::IntVec parse_gamma(const std::string& text, std::size_t n)
{
    nfk::IntVec g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        nfk::BigInt c;
        if (c.set_str(item, 10) != 0) throw nfk::InvalidInput("bad coordinate in --gamma: " + item);
        g.push_back(c);
    }
    if (g.size() != n) throw nfk::InvalidInput("--gamma needs " + std::to_string(n) + " comma-separated coordinates");
    return g;
}

nfk::NumberField load(const Options& o)
{
    nfk::FieldSpec spec = nfk::load_field_spec(o.spec);
    if (o.ell) spec.ell = *o.ell;
    return nfk::build_field(spec);
}

std::string steinitz_report(const nfk::KummerField& kf, const nfk::IntVec& gamma, nfk::Format f)
{
    const nfk::KummerDatum d = kf.normalize(gamma);
    const nfk::Discriminant disc = kf.relative_discriminant(d);
    const nfk::SteinitzResult st = kf.steinitz_class(d, disc);
    const nfk::TraceFormCheck tf = nfk::trace_form_discriminant(kf.field(), gamma, kf.ell());
    if (f == nfk::Format::json) {
        nlohmann::ordered_json j;
        j["gamma"] = nlohmann::ordered_json::array();
        for (const auto& c : gamma) j["gamma"].push_back(c.get_str());
        j["normalized"] = nlohmann::ordered_json::array();
        for (const auto& c : d.gamma) j["normalized"].push_back(c.get_str());
        j["disc"] = disc.delta.str();
        j["disc_norm"] = disc.norm.get_str();
        j["ell_part"] = disc.ell_part.str();
        j["steinitz_ideal"] = st.ideal.str();
        j["steinitz"] = st.cls;
        j["trace_form_agrees"] = tf.agrees;
        return j.dump(2) + "\n";
    }
    std::string out;
    const std::string sep = f == nfk::Format::csv ? "," : ": ";
    auto line = [&](const std::string& k, const std::string& v) {
        out += k + sep + (f == nfk::Format::csv && v.find(',') != std::string::npos ? "\"" + v + "\"" : v) + "\n";
    };
    std::string norm = "[";
    for (std::size_t i = 0; i < d.gamma.size(); ++i) norm += (i ? "," : "") + d.gamma[i].get_str();
    line("normalized gamma", norm + "]");
    line("discriminant", disc.delta.str());
    line("N(discriminant)", disc.norm.get_str());
    line("ell-part", disc.ell_part.str());
    line("Steinitz ideal", st.ideal.str());
    line("Steinitz class", nfk::class_label(st.cls));
    line("trace form agrees", tf.agrees ? "yes" : "no");
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{"Kummer extensions, relative discriminants and Steinitz classes"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--spec", o.spec, "field spec JSON file")->required()->check(CLI::ExistingFile);
    app.add_option("--ell", o.ell, "prime degree (overrides the spec)");
    app.add_option("--bound", o.bound, "bound X on N(Delta) or on ideal norms");
    app.add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--jobs", o.jobs, "worker count (results do not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--ceiling", o.ceiling, "search ceiling for lattice enumeration (overrides NFK_CEILING)")
        ->check(CLI::PositiveNumber);

    auto* field = app.add_subcommand("field", "field invariants");
    field->add_subcommand("info", "field invariants (same as plain `field`)");
    auto* classgroup = app.add_subcommand("classgroup", "class group structure and generators");
    auto* units = app.add_subcommand("units", "roots of unity, fundamental units, regulator");
    auto* rho = app.add_subcommand("rho", "density table rho_Q over the possible ell-parts");
    auto* enumerate = app.add_subcommand("enumerate", "stream extensions with N(Delta) <= bound");
    enumerate->add_flag("--no-dedup", o.no_dedup, "emit every generator in each power orbit");
    auto* steinitz = app.add_subcommand("steinitz", "discriminant and Steinitz class of K(gamma^(1/ell))");
    steinitz->add_option("--gamma", o.gamma, "coordinates c0,c1,... in the power basis")->required();
    auto* experiment = app.add_subcommand("experiment", "Steinitz class tallies by ell-part");
    auto* identity = app.add_subcommand("identity-check", "exact density identity for ell = 2");
    auto* count = app.add_subcommand("count-check", "extension count against the analytic constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    if (o.ceiling) {
        nfk::Ceilings c = nfk::Ceilings::defaults();
        c.lattice_points = *o.ceiling;
        nfk::Ceilings::set_defaults(c);
    }
    const nfk::Format fmt = nfk::parse_format(o.format);
    const nfk::NumberField k = load(o);
    const int ell = o.ell.value_or(nfk::load_field_spec(o.spec).ell);
    std::ostream& out = std::cout;

    if (field->parsed()) {
        out << nfk::serialize(nfk::field_info(k), fmt);
    } else if (classgroup->parsed()) {
        const nfk::ClassGroup& cg = nfk::class_group(k);
        if (fmt == nfk::Format::json) {
            nlohmann::ordered_json j;
            j["class_group"] = cg.group().divisors();
            j["class_number"] = cg.h();
            j["generators"] = nlohmann::ordered_json::array();
            for (const auto& q : cg.generators())
                j["generators"].push_back({{"prime", q.str()}, {"class", cg.class_of(q)}});
            out << j.dump(2) << "\n";
        } else {
            out << (fmt == nfk::Format::csv ? "prime,class\n" : "Cl(K) = " + cg.group().str() + ", h = " +
                                                                    std::to_string(cg.h()) + "\n");
            for (const auto& q : cg.generators()) {
                const std::string cls = nfk::class_label(cg.class_of(q));
                out << (fmt == nfk::Format::csv ? "\"" + q.str() + "\",\"" + cls + "\"" : q.str() + "  " + cls) << "\n";
            }
        }
    } else if (units->parsed()) {
        out << nfk::serialize(nfk::field_info(k), fmt);
    } else if (rho->parsed()) {
        out << nfk::serialize(nfk::density_report(nfk::KummerField(k, ell)), fmt);
    } else if (enumerate->parsed()) {
        const nfk::KummerField kf(k, ell);
        nfk::EnumerationOptions opt;
        opt.dedup = !o.no_dedup;
        out << nfk::record_header(fmt);
        for (const auto& rec : kf.collect(parse_bound(o.bound), opt)) out << nfk::serialize(rec, fmt);
    } else if (steinitz->parsed()) {
        const nfk::KummerField kf(k, ell);
        out << steinitz_report(kf, parse_gamma(o.gamma, k.dim()), fmt);
    } else if (experiment->parsed()) {
        const nfk::KummerField kf(k, ell);
        out << nfk::serialize(nfk::run_equidistribution_experiment(kf, parse_bound(o.bound)), fmt);
    } else if (identity->parsed()) {
        if (ell != 2) throw nfk::InvalidInput("identity-check is stated for ell = 2");
        const nfk::DensityReport r = nfk::density_report(nfk::KummerField(k, 2));
        const std::string got = nfk::to_string(*r.identity), want = nfk::to_string(*r.identity_expected);
        if (fmt == nfk::Format::json) {
            nlohmann::ordered_json j;
            j["field"] = r.field;
            j["identity"] = got;
            j["identity_expected"] = want;
            j["holds"] = got == want;
            out << j.dump(2) << "\n";
        } else if (fmt == nfk::Format::csv) {
            out << "field,identity,identity_expected\n" << r.field << "," << got << "," << want << "\n";
        } else {
            out << r.field << ": " << got << " (expected " << want << ")" << (got == want ? "" : "  MISMATCH") << "\n";
        }
        if (got != want) return Exit::failure;
    } else if (count->parsed()) {
        out << nfk::serialize(nfk::run_count_asymptotic_check(nfk::KummerField(k, 2), parse_bound(o.bound)), fmt);
    }
    return Exit::ok;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const nfk::CeilingExceeded& e) {
        std::cerr << "nfk: ceiling exceeded: " << e.what() << "\n";
        return Exit::ceiling;
    } catch (const nfk::InvalidInput& e) {
        std::cerr << "nfk: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::exception& e) {
        std::cerr << "nfk: " << e.what() << "\n";
        return Exit::failure;
    }
}
