#include "flagfrob/frobdecomp.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagfrob;

namespace {

std::size_t index_of(const ExcCollection& c, const std::string& name)
{
    const auto objs = c.flat();
    for (std::size_t i = 0; i < objs.size(); ++i)
        if (objs[i]->name == name) return i;
    ADD_FAILURE() << "no object " << name;
    return 0;
}

}  // namespace

TEST(Collection, ShapeOnX4AndX5)
{
    const auto c4 = build_collection(Variety::X4);
    EXPECT_EQ(c4.size(), 12u);
    EXPECT_EQ(c4.blocks.size(), 6u);
    EXPECT_EQ(c4.blocks.front().label, "C_-5");
    EXPECT_EQ(c4.blocks.back().label, "C_0");
    const auto c5 = build_collection(Variety::X5);
    EXPECT_EQ(c5.size(), 20u);
    EXPECT_EQ(c5.blocks.front().degree, 7);
}

TEST(Collection, GramMatchesLineBundleOracle)
{
    // pairs of line bundles are checked against the hypersurface formula
    for (Variety v : {Variety::X4, Variety::X5}) {
        const auto c = build_collection(v);
        const int n = c.n;
        const auto g = gram(c, 2);
        const auto objs = c.flat();
        for (std::size_t i = 0; i < objs.size(); ++i)
            for (std::size_t j = 0; j < objs.size(); ++j) {
                const auto& a = objs[i]->ref;
                const auto& b = objs[j]->ref;
                if (!a || !b || !a->is_line() || !b->is_line()) continue;
                const Weight d = b->twist - a->twist;
                EXPECT_EQ(g.m[i][j], oracle::incidence_euler(n, d[0], d[n - 2]));
            }
    }
}

TEST(Collection, GramIsUnitriangularAndUnimodular)
{
    for (Variety v : {Variety::X4, Variety::X5}) {
        const auto g = gram(build_collection(v), 4);
        EXPECT_TRUE(g.is_unitriangular());
        EXPECT_EQ(g.determinant(), 1);
        EXPECT_TRUE(g.is_unimodular());
    }
}

TEST(Collection, BlocksAreOrthogonalAtKLevel)
{
    for (Variety v : {Variety::X4, Variety::X5}) EXPECT_TRUE(block_orthogonality_defects(build_collection(v)).empty());
}

TEST(RightDual, IsDualBasis)
{
    for (Variety v : {Variety::X4, Variety::X5}) {
        const auto c = build_collection(v);
        const auto d = right_dual_basis(c, 2);
        const auto cls = c.classes();
        for (std::size_t j = 0; j < cls.size(); ++j)
            for (std::size_t i = 0; i < cls.size(); ++i)
                EXPECT_EQ(euler_pairing(d.classes[j], cls[i]), i == j ? 1 : 0);
    }
}

TEST(RightDual, CoordinatesRecoverClasses)
{
    const auto c = build_collection(Variety::X4);
    const auto d = right_dual_basis(c, 1);
    const auto& cat = *c.catalog;
    const KClass x = KClass::line(Weight{2, 0, -3}) - 3 * cat.kclass(cat.ref("Psi2_w1w3").twisted(Weight{0, 0, 4}));
    const auto co = coordinates(d, x);
    KClass back(4);
    const auto cls = c.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) back += co[i] * cls[i];
    EXPECT_TRUE(k_equal(back, x));
}

TEST(RightDual, NonExceptionalInputIsRejected)
{
    auto c = build_collection(Variety::X4);
    std::swap(c.blocks.front(), c.blocks.back());
    EXPECT_THROW((void)right_dual_basis(c, 1), NotExceptional);
}

TEST(Lattice, HermiteFormDecidesSpan)
{
    const IntMatrix a{{2, 4}, {1, 3}};
    const IntMatrix b{{1, 1}, {0, 2}};
    const IntMatrix c{{1, 0}, {0, 1}};
    EXPECT_TRUE(same_span(a, b));
    EXPECT_FALSE(same_span(a, c));
}

TEST(MutationProperty, RightUndoesLeft)
{
    std::mt19937_64 rng(77);
    const auto c = build_collection(Variety::X5);
    const auto cls = c.classes();
    std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 2);
    for (int t = 0; t < 40; ++t) {
        const std::size_t i = pick(rng);
        const std::vector<KClass> e{cls[i]};
        const KClass l = left_mutate(e, cls[i + 1]);
        EXPECT_TRUE(k_equal(right_mutate(e, l), cls[i + 1]));
    }
}

TEST(MutationProperty, BlockMutationKeepsSpanAndExceptionality)
{
    for (Variety v : {Variety::X4, Variety::X5}) {
        const auto c = build_collection(v);
        for (std::size_t i = 1; i < c.blocks.size(); ++i) {
            const auto l = mutate_block_left_k(c, i);
            EXPECT_TRUE(same_span(c, l));
            EXPECT_TRUE(gram(l).is_unitriangular());
            EXPECT_EQ(l.blocks[i - 1].objects.size(), c.blocks[i].objects.size());
            const auto back = mutate_block_right_k(l, i);
            for (std::size_t b = 0; b < c.blocks.size(); ++b)
                for (std::size_t o = 0; o < c.blocks[b].objects.size(); ++o)
                    EXPECT_TRUE(k_equal(back.blocks[b].objects[o].kclass, c.blocks[b].objects[o].kclass));
        }
        EXPECT_THROW((void)mutate_block_left_k(c, 0), std::out_of_range);
        EXPECT_THROW((void)mutate_block_left_k(c, c.blocks.size()), std::out_of_range);
    }
}

TEST(Semiorthogonality, X4AtFive)
{
    const auto c = build_collection(Variety::X4);
    const auto rep = verify_semiorthogonality(c, 5, 4);
    EXPECT_FALSE(rep.has_violation());
    const int a = static_cast<int>(index_of(c, "L(-1,0,0)"));
    const int b = static_cast<int>(index_of(c, "L(0,0,-1)"));
    bool seen = false;
    for (const auto& pc : rep.pairs)
        if (pc.from == a && pc.to == b) {
            seen = true;
            EXPECT_TRUE(pc.within_block);
            EXPECT_EQ(pc.status, PairStatus::VerifiedZero);
        }
    EXPECT_TRUE(seen);
    const std::size_t N = c.size();
    std::size_t within = 0;
    for (const auto& b : c.blocks) within += b.objects.size() * (b.objects.size() - 1);
    EXPECT_EQ(rep.pairs.size(), N * (N - 1) / 2 + within / 2);
}

TEST(Semiorthogonality, X5AtSevenHasNoViolation)
{
    const auto rep = verify_semiorthogonality(build_collection(Variety::X5), 7, 4);
    EXPECT_FALSE(rep.has_violation());
    EXPECT_GT(rep.count(PairStatus::VerifiedZero), 0u);
}
