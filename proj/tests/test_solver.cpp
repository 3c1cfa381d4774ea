#include "flagfrob/frobdecomp.hpp"

#include <gtest/gtest.h>

using namespace flagfrob;

TEST(Solver, LineBundleFallsBackToLineSearch)
{
    const auto cat = shared_catalog(4);
    const auto [c, cert] = solve_presented(*cat, BundleRef::line(Weight{-1, 0, 0}), 5, true);
    const auto [d, dc] = coh_line_charp(Weight{-5, 0, 0}, 5);
    EXPECT_EQ(c, d);
}

TEST(Solver, PresentedBundlesAreConcentrated)
{
    const auto cat = shared_catalog(4);
    struct Case {
        const char* name;
        int degree;
        int64_t p;
        int64_t dim;
    };
    for (const auto& k : {Case{"Psi2_w1w3", 2, 5, 1480}, Case{"Psi1_w1", 1, 5, 52}, Case{"Psi2_w1w3", 2, 7, 6401}}) {
        const auto [c, cert] = solve_presented(*cat, k.name, k.p, true);
        ASSERT_EQ(c.concentrated_degree(), k.degree) << k.name << ": " << c.str();
        EXPECT_EQ(c.degrees.begin()->second.dim, k.dim);
    }
}

TEST(SolverProperty, CertificatesReplayAndMatchEuler)
{
    for (int n : {4, 5}) {
        const auto cat = shared_catalog(n);
        for (const auto& name : cat->base_names())
            for (int64_t p : {5, 7}) {
                const auto ref = cat->ref(name);
                const auto [c, cert] = solve_presented(*cat, ref, p, true);
                EXPECT_EQ(c.euler, euler_char(cat->kclass(ref).frobenius_twist(p))) << name;
                EXPECT_EQ(replay(cert), c) << name;
                if (c.kind == CohInfo::Kind::Determined) EXPECT_EQ(c.alternating_sum(), c.euler) << name;
            }
    }
}

TEST(Solver, RenderedCertificateNamesConstraints)
{
    const auto cat = shared_catalog(4);
    const auto [c, cert] = solve_presented(*cat, "Psi2_w1w3", 5, true);
    const std::string text = render_certificate(cert);
    EXPECT_NE(text.find("Psi2_w1w3"), std::string::npos);
    EXPECT_NE(text.find("exact"), std::string::npos);
}
