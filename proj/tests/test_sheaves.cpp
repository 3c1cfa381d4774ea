#include "flagfrob/collections.hpp"
#include "flagfrob/frobdecomp.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagfrob;

namespace {

Weight ab(int n, int64_t a, int64_t b) { return a * Weight::fundamental(n, 1) + b * Weight::fundamental(n, n - 1); }

}  // namespace

TEST(KClass, EulerOnIncidenceVarietyMatchesHypersurfaceFormula)
{
    for (int n : {4, 5, 6})
        for (int64_t a = -7; a <= 7; ++a)
            for (int64_t b = -7; b <= 7; ++b)
                EXPECT_EQ(euler_char(ab(n, a, b)), oracle::incidence_euler(n, a, b)) << n << ' ' << a << ' ' << b;
}

TEST(KClass, BasicPairings)
{
    EXPECT_EQ(euler_pairing(KClass::trivial(4), KClass::trivial(4)), 1);
    EXPECT_EQ(euler_pairing(KClass::line(Weight::fundamental(4, 1)), KClass::trivial(4)), 0);
}

TEST(KClass, PairingIsBilinear)
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int64_t> d(-4, 4);
    auto rnd = [&] {
        KClass k(4);
        for (int i = 0; i < 3; ++i) k.add(Weight{d(rng), d(rng), d(rng)}, d(rng));
        return k;
    };
    for (int t = 0; t < 40; ++t) {
        const KClass a = rnd(), b = rnd(), c = rnd();
        const BigInt s = d(rng);
        EXPECT_EQ(euler_pairing(a + b, c), euler_pairing(a, c) + euler_pairing(b, c));
        EXPECT_EQ(euler_pairing(a, s * b + c), s * euler_pairing(a, b) + euler_pairing(a, c));
        EXPECT_EQ(a.dual().dual(), a);
        EXPECT_EQ(euler_pairing(a, b), euler_char(a.dual() * b));
    }
}

TEST(KClass, EqualityAndSign)
{
    const KClass a = KClass::line(Weight{1, 0, 0}) + KClass::line(Weight{0, 0, 1});
    EXPECT_TRUE(k_equal(a, a));
    EXPECT_EQ(k_sign(a, -a), -1);
    EXPECT_EQ(k_sign(a, KClass::trivial(4)), 0);
}

TEST(Catalog, PresentationsAreConsistent)
{
    for (int n : {4, 5, 6}) {
        const auto cat = build_catalog(n);
        EXPECT_NO_THROW(cat.verify_presentations()) << n;
        for (const auto& name : cat.base_names())
            for (const auto& pr : cat.expr(name).presentations)
                EXPECT_TRUE(k_equal(cat.presentation_defect(cat.expr(name), pr), KClass(n))) << name << ": " << pr.anchor;
    }
}

TEST(Catalog, RanksOnX4)
{
    const auto cat = build_catalog(4);
    EXPECT_EQ(cat.expr("Psi1_w1").rank(), 3);
    EXPECT_EQ(cat.expr("Psi2_w1").rank(), 3);
    EXPECT_EQ(cat.expr("E").rank(), 2);
    EXPECT_EQ(cat.expr("G~").rank(), 4);
}

TEST(Catalog, RejectsSmallN) { EXPECT_THROW((void)build_catalog(3), UnsupportedVariety); }

TEST(Catalog, DualizedPresentationsStayExact)
{
    const auto cat = build_catalog(4);
    for (const auto& name : {"Psi1_w1", "Psi2_w1w3", "E"}) {
        const BundleRef r = cat.ref(name).dualized().twisted(Weight{-1, 0, -1});
        const auto e = cat.expr(r);
        ASSERT_FALSE(e.presentations.empty()) << name;
        for (const auto& pr : e.presentations) EXPECT_TRUE(k_equal(cat.presentation_defect(e, pr), KClass(4))) << name;
    }
}

TEST(Catalog, OpenPairingValue)
{
    const auto cat = build_catalog(4);
    const KClass a = KClass::line(ab(4, -1, -1));
    const KClass e = cat.kclass(cat.ref("E").twisted(ab(4, -1, 0)));
    EXPECT_EQ(euler_pairing(a, e), 6);
}

TEST(Mutation, LineBundleThroughFirstBlocksGivesMixedPsi)
{
    const auto cat = build_catalog(4);
    const std::vector<KClass> a0{KClass::trivial(4)};
    const std::vector<KClass> a1{KClass::line(ab(4, 1, 0)), KClass::line(ab(4, 0, 1))};
    const KClass m = left_mutate(a0, left_mutate(a1, KClass::line(ab(4, 1, 1))));
    EXPECT_NE(k_sign(m, cat.kclass(cat.ref("Psi2_w1w3"))), 0);
}
