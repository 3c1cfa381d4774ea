#include "flagfrob/coh.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagfrob;

namespace {

Weight random_weight(std::mt19937_64& rng, int n, int lo, int hi)
{
    std::uniform_int_distribution<int64_t> d(lo, hi);
    std::vector<int64_t> c(n - 1);
    for (auto& x : c) x = d(rng);
    return Weight(std::move(c));
}

void expect_matches_bott(const CohInfo& c, const Weight& l)
{
    const auto b = oracle::borel_weil_bott({l.coeffs().begin(), l.coeffs().end()});
    if (b.acyclic) {
        EXPECT_TRUE(c.is_acyclic()) << l.str() << ": " << c.str();
        return;
    }
    ASSERT_EQ(c.concentrated_degree(), b.degree) << l.str() << ": " << c.str();
    EXPECT_EQ(c.degrees.begin()->second.dim, b.dim);
}

}  // namespace

TEST(Coh, CharZeroIsBorelWeilBott)
{
    std::mt19937_64 rng(1);
    for (int n = 3; n <= 5; ++n)
        for (int t = 0; t < 150; ++t) {
            const Weight l = random_weight(rng, n, -7, 7);
            expect_matches_bott(coh_line_char0(l), l);
        }
}

TEST(Coh, LargePrimeAgreesWithCharZeroNearOrigin)
{
    // every W-conjugate of lambda + rho stays inside (-p, p), so no p-alcove wall is crossed
    std::mt19937_64 rng(2);
    for (int t = 0; t < 150; ++t) {
        const Weight l = random_weight(rng, 4, -3, 3);
        const auto [c, cert] = coh_line_charp(l, 101);
        if (c.is_bounded()) continue;
        expect_matches_bott(c, l);
    }
}

TEST(Coh, KempfForDominantWeights)
{
    for (int64_t p : {2, 3, 5, 7})
        for (const Weight& l : {Weight{0, 0, 0}, Weight{3, 0, 1}, Weight{9, 4, 0}, Weight{1, 1, 1}}) {
            const auto [c, cert] = coh_line_charp(l, p);
            ASSERT_EQ(c.concentrated_degree(), 0);
            EXPECT_EQ(c.degrees.begin()->second.dim, weyl_dim(l));
        }
}

TEST(Coh, ExplainedExample)
{
    const auto [c, cert] = coh_line_charp(Weight{-5, 0, 5}, 5);
    ASSERT_EQ(c.concentrated_degree(), 2);
    EXPECT_EQ(c.degrees.begin()->second.dim, 126);
    EXPECT_EQ(c.degrees.begin()->second.label, (Weight{0, 2, 2}));
    int moves = 0;
    for (const auto& s : cert.steps) moves += s.kind == StepKind::AndersenDown || s.kind == StepKind::AndersenUp;
    EXPECT_EQ(moves, 2);
}

TEST(CohProperty, EulerCharacteristicIsRespected)
{
    std::mt19937_64 rng(4);
    for (int64_t p : {3, 5, 7})
        for (int t = 0; t < 200; ++t) {
            const Weight l = random_weight(rng, 4, -3 * p, 3 * p);
            const auto [c, cert] = coh_line_charp(l, p);
            EXPECT_EQ(c.euler, euler_char(l));
            if (c.kind == CohInfo::Kind::Determined) EXPECT_EQ(c.alternating_sum(), c.euler) << l.str();
        }
}

TEST(CohProperty, SerreDualitySymmetry)
{
    std::mt19937_64 rng(6);
    const int N = 6;
    for (int t = 0; t < 200; ++t) {
        const Weight l = random_weight(rng, 4, -14, 14);
        const Weight d = Weight::zero(4) - 2 * Weight::rho(4) - l;
        const auto [a, ca] = coh_line_charp(l, 5);
        const auto [b, cb] = coh_line_charp(d, 5);
        if (a.kind != CohInfo::Kind::Determined || b.kind != CohInfo::Kind::Determined) continue;
        ASSERT_EQ(a.degrees.size(), b.degrees.size());
        for (const auto& [deg, e] : a.degrees) {
            auto it = b.degrees.find(N - deg);
            ASSERT_NE(it, b.degrees.end()) << l.str();
            EXPECT_EQ(it->second.dim, e.dim);
        }
    }
}

TEST(CohProperty, CertificatesReplay)
{
    std::mt19937_64 rng(8);
    for (int n : {3, 4, 5})
        for (int t = 0; t < 80; ++t) {
            const Weight l = random_weight(rng, n, -15, 15);
            const auto [c, cert] = coh_line_charp(l, 7);
            EXPECT_EQ(replay_line(cert), c) << l.str();
        }
}

TEST(CohProperty, TamperedCertificateIsRejected)
{
    auto [c, cert] = coh_line_charp(Weight{-5, 0, 5}, 5);
    ASSERT_FALSE(cert.steps.empty());
    cert.steps.front().to.mu = Weight{1, 1, 1};
    EXPECT_THROW((void)replay_line(cert), std::logic_error);
}

TEST(Coh, RejectsBadCharacteristic) { EXPECT_THROW((void)coh_line_charp(Weight{0, 0}, 1), DomainError); }
