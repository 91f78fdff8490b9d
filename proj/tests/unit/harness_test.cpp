#include "fixtures.hpp"

#include "nfk/experiment.hpp"
#include "nfk/field_spec.hpp"
#include "nfk/report.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace nfk;
using nfk::testing::make_field;

TEST(FieldSpecTest, Parses)
{
    const FieldSpec s = parse_field_spec(R"({"poly": [-9, -1, 0, 1], "ell": 2, "label": "cubic-9"})");
    EXPECT_EQ(s.poly, (std::vector<BigInt>{-9, -1, 0, 1}));
    EXPECT_EQ(s.ell, 2);
    EXPECT_EQ(s.label, "cubic-9");
    EXPECT_FALSE(s.known_h);
    const FieldSpec big = parse_field_spec(R"({"poly": ["-123456789012345678901", 0, 1]})");
    EXPECT_EQ(big.poly[0], BigInt("-123456789012345678901"));
}

TEST(FieldSpecTest, Rejects)
{
    EXPECT_THROW(parse_field_spec("{"), InvalidInput);
    EXPECT_THROW(parse_field_spec(R"({"ell": 2})"), InvalidInput);
    EXPECT_THROW(parse_field_spec(R"({"poly": [1, 2]})"), InvalidInput);  // not monic
    EXPECT_THROW(parse_field_spec(R"({"poly": [1, 0, 1], "known_h": 0})"), InvalidInput);
    EXPECT_THROW(build_field(parse_field_spec(R"({"poly": [1, 0, 1], "ell": 3})")), InvalidInput);
    EXPECT_THROW(build_field(parse_field_spec(R"({"poly": [5, 0, 1], "known_h": 3})")), InvalidInput);
    EXPECT_THROW(build_field(parse_field_spec(R"({"poly": [-2, 0, 1], "known_units": [[3, 2]]})")), InvalidInput);
}

TEST(FieldSpecTest, KnownDataInstalled)
{
    const NumberField k = build_field(parse_field_spec(R"({"poly": [-7, 0, 1], "known_units": [[8, 3]], "known_h": 1})"));
    EXPECT_EQ(unit_group(k).fundamental_units()[0], (IntVec{8, 3}));
    EXPECT_EQ(class_group(k).h(), 1u);
}

TEST(ReportTest, DensityRoundTrip)
{
    const DensityReport r = density_report(KummerField(make_field({-9, -1, 0, 1}, 2, "cubic-9"), 2));
    const std::string json = serialize(r, Format::json);
    const DensityTable parsed = parse_density_json(json);
    EXPECT_EQ(parsed, density_table(r));
    EXPECT_EQ(serialize(parsed, Format::json), json);
    const auto j = nlohmann::json::parse(json);
    EXPECT_EQ(j["rows"][2]["Q_norm"], "512");
    EXPECT_EQ(j["rows"][2]["rho"], "1/2");
    EXPECT_EQ(j["rows"][2]["Q"], "q[p=2,f=3]^3");
    EXPECT_EQ(j["identity"], "1/2");
    EXPECT_EQ(j["identity_expected"], "1/2");
}

TEST(ReportTest, EmptyReportsAreValid)
{
    DensityTable t;
    t.field = "none";
    const auto j = nlohmann::json::parse(serialize(t, Format::json));
    EXPECT_TRUE(j["rows"].empty());
    ExperimentReport e;
    e.field = "none";
    EXPECT_NO_THROW(nlohmann::json::parse(serialize(e, Format::json)));
    EXPECT_EQ(serialize(e, Format::csv), "Q_norm,class,count,fraction,Q\n");
}

TEST(ReportTest, ExperimentCsvAndTallies)
{
    const KummerField kf(make_field({5, 0, 1}, 2, "qm5"), 2);
    const ExperimentReport r = run_equidistribution_experiment(kf, 3000);
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        std::uint64_t col = 0;
        for (std::size_t i = 0; i < r.rows.size(); ++i) col += r.counts[i][c];
        EXPECT_EQ(col, r.column_totals[c]);
        sum += r.column_totals[c];
    }
    EXPECT_EQ(sum, r.total);
    EXPECT_EQ(r.total, kf.collect(3000).size());
    EXPECT_EQ(r.steinitz_failures, 0u);
    const std::string csv = serialize(r, Format::csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "Q_norm,class,count,fraction,Q");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(1 + r.rows.size() * r.columns.size()));
    // byte-identical on a second run
    EXPECT_EQ(serialize(run_equidistribution_experiment(kf, 3000), Format::json), serialize(r, Format::json));
}

TEST(ReportTest, RecordLines)
{
    const KummerField kf(make_field({0, 1}, 2), 2);
    const auto recs = kf.collect(12);
    ASSERT_FALSE(recs.empty());
    const auto j = nlohmann::json::parse(serialize(recs.back(), Format::json));
    EXPECT_EQ(j["gamma"], nlohmann::json::array({3}));
    EXPECT_EQ(j["disc_norm"], "12");
    EXPECT_EQ(j["disc_factored"][0][0], "2,1,1");
    EXPECT_EQ(j["disc_factored"][0][1], 2);
    EXPECT_TRUE(j["steinitz"].empty());
}

TEST(ReportTest, FieldInfo)
{
    const FieldInfo info = field_info(make_field({-9, -1, 0, 1}, 2, "cubic-9"));
    EXPECT_EQ(info.discriminant, -2183);
    EXPECT_EQ(info.class_number, 2u);
    EXPECT_EQ(info.fundamental_units.size(), 1u);
    const auto j = nlohmann::json::parse(serialize(info, Format::json));
    EXPECT_EQ(j["signature"], nlohmann::json::array({1, 1}));
    EXPECT_NE(serialize(info, Format::table).find("-2183"), std::string::npos);
    EXPECT_THROW(parse_format("xml"), InvalidInput);
}

TEST(ExperimentTest, GaussianSingleClass)
{
    const ExperimentReport r = run_equidistribution_experiment(KummerField(make_field({1, 0, 1}, 2), 2), 1000);
    ASSERT_EQ(r.columns.size(), 1u);
    EXPECT_EQ(r.column_totals[0], r.total);
    EXPECT_EQ(r.column_deviation, 0);
}

TEST(ExperimentTest, CountCheckSmall)
{
    const CountReport c = run_count_asymptotic_check(KummerField(make_field({0, 1}, 2), 2), 100000);
    EXPECT_NEAR(c.closed_ratio, 1.0, 0.02);
    EXPECT_NEAR(c.closed_constant, 6 / (M_PI * M_PI), 1e-6);
    EXPECT_NEAR(c.product_constant, c.closed_constant, 1e-9);
    EXPECT_EQ(c.identity, c.identity_expected);
    EXPECT_THROW(run_count_asymptotic_check(KummerField(make_field({1, 1, 1}, 3), 3), 100), InvalidInput);
}
