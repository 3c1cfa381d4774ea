#include "flagfrob/json_io.hpp"

#include <gtest/gtest.h>

using namespace flagfrob;
using io::json;

namespace {

void round_trip(const json& j)
{
    const std::string a = j.dump(2);
    EXPECT_EQ(json::parse(a).dump(2), a);
}

void all_numbers_are_strings(const json& j)
{
    if (j.is_object() || j.is_array())
        for (const auto& x : j) all_numbers_are_strings(x);
    else
        EXPECT_FALSE(j.is_number()) << j.dump();
}

}  // namespace

TEST(Json, DecompositionRoundTrip)
{
    const auto j = io::to_json(decompose(Variety::X4, 5, 2), true);
    round_trip(j);
    all_numbers_are_strings(j);
    EXPECT_EQ(j["rank_identity"]["lhs"], "3125");
    EXPECT_EQ(j["verdict"], "pass");
}

TEST(Json, DeterministicAcrossThreadCounts)
{
    EXPECT_EQ(io::to_json(decompose(Variety::X5, 7, 1), true).dump(),
              io::to_json(decompose(Variety::X5, 7, 8), true).dump());
}

TEST(Json, OtherReportsRoundTrip)
{
    round_trip(io::to_json(*shared_catalog(5)));
    const auto s = io::to_json(verify_semiorthogonality(build_collection(Variety::X4), 5, 2), true);
    round_trip(s);
    all_numbers_are_strings(s);
    round_trip(io::to_json(conjecture_check(4, 5, 2)));
    const auto [c, cert] = coh_line_charp(Weight{-5, 0, 5}, 5);
    round_trip(io::to_json(cert));
    EXPECT_EQ(io::to_json(c)["degrees"][0]["dim"], "126");
}

TEST(Json, BigNumbersAreExact)
{
    const auto j = io::to_json(decompose(Variety::X5, 11, 4));
    EXPECT_EQ(j["rank_identity"]["rhs"], "19487171");
}
