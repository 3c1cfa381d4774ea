#include "flagfrob/frobdecomp.hpp"

#include <gtest/gtest.h>

using namespace flagfrob;

namespace {

const Summand& find(const DecompositionReport& r, const std::string& object)
{
    for (const auto& s : r.summands)
        if (s.object == object) return s;
    throw std::out_of_range(object);
}

}  // namespace

TEST(Decompose, X4AtFive)
{
    const auto r = decompose(Variety::X4, 5, 4);
    ASSERT_EQ(r.verdict(), "pass");
    EXPECT_EQ(r.rank_identity.lhs, 3125);
    EXPECT_EQ(find(r, "O").multiplicity, 1);
    EXPECT_EQ(find(r, "O").name, "O");
    const auto& l1 = find(r, "Psi1_w1");
    EXPECT_EQ(l1.name, "L(-1,0,0)");
    EXPECT_EQ(l1.multiplicity, 52);
}

TEST(DecomposeProperty, MultiplicityIsSignedEulerOfPullback)
{
    // F_* O = sum dual(F_j) (x) H^{deg}(F^* E_j); since F^* E_j is concentrated,
    // its dimension is the Euler characteristic of the twisted class
    for (Variety v : {Variety::X4, Variety::X5})
        for (int64_t p : {5, 7, 11}) {
            const auto c = build_collection(v);
            const auto r = decompose_collection(c, p, 4);
            const auto objs = c.flat();
            ASSERT_EQ(r.verdict(), "pass") << variety_name(v) << " p=" << p;
            for (std::size_t j = 0; j < objs.size(); ++j) {
                BigInt chi = euler_char(objs[j]->kclass.frobenius_twist(p));
                if (r.summands[j].degree % 2) chi = -chi;
                EXPECT_EQ(r.summands[j].multiplicity, chi) << objs[j]->name;
            }
        }
}

TEST(DecomposeProperty, RankIdentityAcrossPrimes)
{
    for (int64_t p : {3, 5, 7, 11, 13}) {
        const auto r = decompose(Variety::X4, p, 4);
        EXPECT_EQ(r.rank_identity.rhs, ipow(BigInt(p), 5));
        EXPECT_TRUE(r.rank_identity.pass) << p;
    }
    const auto r = decompose(Variety::X5, 7, 4);
    EXPECT_EQ(r.rank_identity.lhs, 823543);
}

TEST(DecomposeProperty, SummandClassesIndependentOfP)
{
    const auto a = decompose(Variety::X4, 5, 2);
    const auto b = decompose(Variety::X4, 13, 2);
    ASSERT_EQ(a.summands.size(), b.summands.size());
    for (std::size_t i = 0; i < a.summands.size(); ++i) {
        EXPECT_EQ(a.summands[i].name, b.summands[i].name);
        EXPECT_TRUE(k_equal(a.summands[i].kclass, b.summands[i].kclass));
    }
}

TEST(Decompose, LabelsOnSummandsWithLineBundleObjects)
{
    const auto r = decompose(Variety::X4, 5, 2);
    EXPECT_EQ(find(r, "O").label, (Weight{0, 0, 0}));
    EXPECT_EQ(find(r, "L(-1,0,-1)").label, (Weight{2, 0, 2}));
}

TEST(Decompose, SmallCharacteristicIsFlagged)
{
    const auto r = decompose(Variety::X4, 2, 2);
    EXPECT_FALSE(r.conforming);
    EXPECT_THROW((void)decompose(Variety::X4, 9, 1), DomainError);
}

TEST(Decompose, NamedSummands)
{
    EXPECT_EQ(named_summands(4).size(), 12u);
    EXPECT_EQ(named_summands(5).size(), 20u);
    EXPECT_EQ(parse_variety("x5"), Variety::X5);
    EXPECT_FALSE(parse_variety("x6"));
}

TEST(Conjecture, ReproducesWorkedCases)
{
    for (auto [n, p] : {std::pair{4, 5}, std::pair{5, 7}}) {
        const auto rep = conjecture_check(n, p, 4);
        EXPECT_TRUE(rep.count_ok);
        EXPECT_TRUE(rep.gram_unitriangular);
        EXPECT_EQ(rep.concentrated, rep.object_count);
        EXPECT_TRUE(rep.conditional_identity.pass);
        EXPECT_FALSE(rep.identity_conditional);
    }
}

TEST(Conjecture, SixIsExceptionalAndCountsMatch)
{
    const auto rep = conjecture_check(6, 7, 4);
    EXPECT_EQ(rep.object_count, 30u);
    EXPECT_TRUE(rep.gram_unitriangular);
    EXPECT_TRUE(rep.gram_unimodular);
    EXPECT_EQ(rep.conditional_identity.rhs, ipow(BigInt(7), 9));
}
