#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p3/cohomtable.hpp"
#include "p3/errors.hpp"
#include "p3/moduli.hpp"
#include "p3/serialize.hpp"

using namespace p3;

namespace {
const ChernData kCharge2{3, 0, 2, 0};
}

TEST(SerializeJson, TableShape)
{
    const auto j = to_json(natural_table(kCharge2, -2, -1));
    EXPECT_EQ(j.dump(),
              R"({"chern":[3,0,2,0],"rows":[{"h":[0,0,0,0],"t":-2},{"h":[0,2,0,0],"t":-1}]})");
}

TEST(SerializeJson, TableRoundTrip)
{
    int checked = 0;
    for (int i = 0; i < 200 && checked < 50; ++i) {
        const auto d = oracle::random_rank3(10);
        CohomTable tbl;
        try {
            tbl = natural_table(d, -8, 8);
        } catch (const NotNaturalizable&) {
            continue;
        }
        ++checked;
        const auto j = to_json(tbl);
        const auto back = table_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(back, tbl);
        EXPECT_EQ(to_json(back).dump(), j.dump());
    }
    EXPECT_GT(checked, 0);
}

TEST(SerializeJson, ChernRoundTrip)
{
    for (int i = 0; i < 100; ++i) {
        const auto d = oracle::random_chern();
        EXPECT_EQ(chern_from_json(to_json(d)), d);
    }
    EXPECT_THROW(chern_from_json(nlohmann::json::parse("[3,0,2]")), DomainError);
}

TEST(SerializeJson, ReportRoundTrip)
{
    const auto r = smooth_dimension(kCharge2, {Hypothesis::stable, Hypothesis::ext2_vanishes});
    const auto j = to_json(r);
    EXPECT_EQ(j.at("dimension"), 16);
    EXPECT_EQ(j.at("chi_end"), -15);
    const auto back = report_from_json(j);
    EXPECT_EQ(to_json(back).dump(), j.dump());

    auto chain = charge2_dimension_chain();
    const auto cj = to_json(chain);
    EXPECT_EQ(cj.at("derivation").size(), 5u);
    EXPECT_EQ(to_json(report_from_json(cj)).dump(), cj.dump());

    chain.dimension.reset();
    EXPECT_TRUE(to_json(chain).at("dimension").is_null());
    EXPECT_FALSE(report_from_json(to_json(chain)).dimension);
}

TEST(SerializeText, Table)
{
    const auto text = format_table_text(natural_table(kCharge2, -1, 1));
    EXPECT_EQ(text,
              "chern (3,0,2,0)\n"
              "   t  h0  h1  h2  h3\n"
              "  -1   0   2   0   0\n"
              "   0   0   1   0   0\n"
              "   1   6   0   0   0\n");
}

TEST(SerializeText, SpectrumLine)
{
    EXPECT_EQ(format_spectrum_line(Spectrum({-1, 1})), "(-1,1): h1(-2)=1 h2(-2)=1 instanton=no");
    EXPECT_EQ(format_spectrum_line(Spectrum({0, 0})), "(0,0): h1(-2)=0 h2(-2)=0 instanton=yes");
}

TEST(SerializeText, ReportMentionsDimension)
{
    const auto text = format_report_text(
        smooth_dimension(kCharge2, {Hypothesis::stable, Hypothesis::ext2_vanishes}));
    EXPECT_NE(text.find("dimension = 16"), std::string::npos);
    EXPECT_NE(text.find("stable"), std::string::npos);
}
