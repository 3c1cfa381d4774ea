#include "flagfrob/rootsys.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagfrob;

namespace {

oracle::Vec vec(const Weight& w) { return {w.coeffs().begin(), w.coeffs().end()}; }

Weight random_weight(std::mt19937_64& rng, int n, int lo, int hi)
{
    std::uniform_int_distribution<int64_t> d(lo, hi);
    std::vector<int64_t> c(n - 1);
    for (auto& x : c) x = d(rng);
    return Weight(std::move(c));
}

}  // namespace

TEST(Weight, FundamentalAndRho)
{
    EXPECT_EQ(Weight::rho(4), (Weight{1, 1, 1}));
    EXPECT_EQ(Weight::fundamental(5, 4), (Weight{0, 0, 0, 1}));
    EXPECT_THROW(Weight::fundamental(4, 4), DimensionError);
    EXPECT_THROW((void)(Weight{1, 2} + Weight{1, 2, 3}), DimensionError);
    EXPECT_EQ((Weight{-1, 0, 2}).pretty(), "-w1+2w3");
}

TEST(Weight, EpsilonRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 7; ++n)
        for (int t = 0; t < 50; ++t) {
            const Weight w = random_weight(rng, n, -9, 9);
            const auto x = to_epsilon(w);
            EXPECT_EQ(from_epsilon(x), w);
        }
}

TEST(WeylElt, WordIsRightmostFirst)
{
    // s1 s2 acting on lambda applies s2 first
    const Weight l{3, -5, 2};
    const auto w = WeylElt::from_word(4, {1, 2});
    EXPECT_EQ(dot_action(w, l), simple_dot(1, simple_dot(2, l)));
    EXPECT_EQ(WeylElt::longest(4).length(), 6);
}

TEST(WeylElt, DotActionMatchesCartanReflections)
{
    std::mt19937_64 rng(5);
    for (int n = 3; n <= 6; ++n)
        for (int t = 0; t < 60; ++t) {
            const Weight l = random_weight(rng, n, -12, 12);
            std::uniform_int_distribution<int> gen(1, n - 1);
            std::vector<int> word(1 + t % 6);
            for (auto& g : word) g = gen(rng);
            EXPECT_EQ(vec(dot_action(WeylElt::from_word(n, word), l)), oracle::dot_word(vec(l), word));
        }
}

TEST(WeylElt, DotActionIsAGroupAction)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        const Weight l = random_weight(rng, 5, -10, 10);
        const auto u = WeylElt::from_word(5, {1, 3, 2});
        const auto v = WeylElt::from_word(5, {4, 2, 1, 3});
        EXPECT_EQ(dot_action(u * v, l), dot_action(u, dot_action(v, l)));
    }
}

TEST(WeylElt, SpecificDotImages)
{
    const int64_t p = 7;
    EXPECT_EQ(dot_action(WeylElt::from_word(4, {2, 1}), Weight{-p, 0, p}), (Weight{0, p - 3, 2}));
    EXPECT_EQ(dot_action(WeylElt::from_word(4, {2, 3}), Weight{2 * p, 0, -p}), (Weight{p + 2, p - 3, 0}));
    EXPECT_EQ(dot_action(WeylElt::from_word(4, {2, 3, 1}), Weight{-p, p, -p}), (Weight{1, p - 4, 1}));
}

TEST(Weyl, DimensionMatchesRootProduct)
{
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 7; ++n)
        for (int t = 0; t < 80; ++t) {
            const Weight l = random_weight(rng, n, -8, 8);
            EXPECT_EQ(weyl_polynomial(l), oracle::weyl_dim_product(vec(l))) << l.str();
        }
}

TEST(Weyl, CharacterHasDimensionAndIsInvariant)
{
    for (const Weight& l : {Weight{1, 0, 0}, Weight{2, 1, 0}, Weight{1, 0, 1}, Weight{0, 2, 0}, Weight{1, 1, 2}}) {
        const auto ch = weyl_character(l);
        BigInt total = 0;
        for (const auto& [mu, m] : ch) total += m;
        EXPECT_EQ(total, weyl_dim(l));
        // multiplicities are invariant under the ordinary Weyl action
        for (const auto& [mu, m] : ch)
            for (int i = 1; i <= 3; ++i) {
                auto x = oracle::reflect(vec(mu), i);
                auto it = ch.find(Weight(x));
                ASSERT_NE(it, ch.end());
                EXPECT_EQ(it->second, m);
            }
    }
}

TEST(Weyl, SingularWeightsHaveZeroPolynomial)
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const Weight l = random_weight(rng, 4, -6, 6);
        EXPECT_EQ(is_singular(l), weyl_polynomial(l) == 0);
    }
}
