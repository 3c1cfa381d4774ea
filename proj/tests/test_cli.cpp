#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(FLAGFROB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return r;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), f)) r.out.append(buf.data(), n);
    const int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST(Cli, CohExplain)
{
    const auto r = run("coh --n 4 --p 5 --weight -5,0,5 --explain");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("H^2 = 126"), std::string::npos);
    EXPECT_NE(r.out.find("AndersenDown"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("coh --n 4 --p 6 --weight 0,0,0").code, 64);
    EXPECT_EQ(run("coh --n 4 --p 5 --weight 0,0").code, 64);
    EXPECT_EQ(run("coh --n 4 --p 5 --weight a,b,c").code, 64);
    EXPECT_EQ(run("decompose --variety x7 --p 5").code, 64);
    EXPECT_EQ(run("").code, 64);
    EXPECT_EQ(run("frobnicate").code, 64);
}

TEST(Cli, DecomposeJson)
{
    const auto r = run("--format json decompose --variety x4 --p 7");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rank_identity"]["lhs"], "16807");
    EXPECT_EQ(j["summands"].size(), 12u);
}

TEST(Cli, DecomposeCsv)
{
    const auto r = run("--format csv decompose --variety x5 --p 7");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("name,object,block,rank,degree,multiplicity,label,certificate\n", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 21);
}

TEST(Cli, VerifyTable)
{
    const auto r = run("verify --variety x4 --p 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("violations 0"), std::string::npos);
}

TEST(Cli, ConjectureIncompleteForSix)
{
    EXPECT_EQ(run("conjecture --n 6 --p 7").code, 3);
    EXPECT_EQ(run("conjecture --n 4 --p 5").code, 0);
}

TEST(Cli, EulerAndCatalog)
{
    const auto r = run("euler --n 4 --weight -1,0,-1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0\n");
    const auto c = run("--format json catalog --n 4");
    ASSERT_EQ(c.code, 0);
    EXPECT_FALSE(nlohmann::json::parse(c.out)["bundles"].empty());
}
