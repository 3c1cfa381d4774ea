#ifndef FLAGFROB_ACCEPTANCE_HPP_
#define FLAGFROB_ACCEPTANCE_HPP_

// The nine acceptance criteria as executable checks. Shared by the
// acceptance test binary and `flagfrob selftest`.

#include "json_io.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace flagfrob::acceptance {

struct Result {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline bool concentrated_in(const CohInfo& c, int d)
{
    const auto k = c.concentrated_degree();
    return k && *k == d;
}

inline bool used_presentation(const Certificate& cert, const std::string& anchor)
{
    if (!cert.trace) return false;
    for (const auto& s : cert.steps)
        if (s.kind == StepKind::LESStep && s.node == cert.trace->root &&
            cert.trace->constraints[s.constraint].label.find(anchor) != std::string::npos)
            return true;
    return false;
}

}  // namespace detail

inline Result criterion1(int threads)
{
    Result r{1, "rank identity on X4, p in {5,7,11,13}", true, {}};
    std::ostringstream os;
    for (int64_t p : {5, 7, 11, 13}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = decompose(Variety::X4, p, threads);
        const double sec = detail::seconds_since(t0);
        const bool ok = rep.unresolved.empty() && rep.rank_identity.pass && sec < 5.0;
        r.pass = r.pass && ok;
        os << "p=" << p << ": " << rep.rank_identity.lhs << "/" << rep.rank_identity.rhs << " unresolved "
           << rep.unresolved.size() << " " << static_cast<int>(sec * 1000) << "ms; ";
    }
    r.detail = os.str();
    return r;
}

inline Result criterion2(int threads)
{
    Result r{2, "rank identity on X5, p in {7,11}, 20 summands", true, {}};
    std::ostringstream os;
    for (int64_t p : {7, 11}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = decompose(Variety::X5, p, threads);
        const double sec = detail::seconds_since(t0);
        const bool ok = rep.summands.size() == 20 && rep.rank_identity.pass && rep.unresolved.empty() && sec < 30.0;
        r.pass = r.pass && ok;
        os << "p=" << p << ": " << rep.rank_identity.lhs << "/" << rep.rank_identity.rhs << " summands "
           << rep.summands.size() << " unresolved " << rep.unresolved.size() << " " << static_cast<int>(sec * 1000)
           << "ms; ";
    }
    r.detail = os.str();
    return r;
}

inline Result criterion3(int threads)
{
    Result r{3, "X4 summand set independent of p", true, {}};
    std::set<std::string> first;
    for (int64_t p : {5, 7, 11, 13}) {
        std::set<std::string> names;
        for (const auto& s : decompose(Variety::X4, p, threads).summands) names.insert(s.name);
        if (first.empty()) first = names;
        else if (names != first) r.pass = false;
    }
    r.detail = std::to_string(first.size()) + " distinct summands";
    return r;
}

inline Result criterion4()
{
    Result r{4, "concentration claims for F* of presented bundles", true, {}};
    std::ostringstream os;
    const auto check = [&](const Catalog& cat, const BundleRef& ref, const std::string& what, int64_t p, int deg,
                           const std::string& need_anchor) {
        auto [info, cert] = solve_presented(cat, ref, p, true);
        bool ok = detail::concentrated_in(info, deg);
        if (!need_anchor.empty()) ok = ok && detail::used_presentation(cert, need_anchor);
        r.pass = r.pass && ok;
        os << what << " p=" << p << ": " << info.str() << (ok ? "" : " FAIL") << "; ";
    };
    const auto& c4 = *shared_catalog(4);
    const auto& c5 = *shared_catalog(5);
    const Weight w1 = Weight::fundamental(4, 1), w3 = Weight::fundamental(4, 3);
    for (int64_t p : {5, 7}) {
        check(c4, c4.ref("E").twisted(-w1), "E(x)L_{-w1}", p, 3, "");
        check(c4, c4.ref("Psi1_w1").dualized().twisted(-w1 - w3), "(Psi1^{w1})^*(x)L_{-w1-w3}", p, 4, "");
        check(c4, c4.ref("Psi2_w1w3"), "Psi2^{w1,w3}", p, 2, "diagonal");
    }
    const Weight v1 = Weight::fundamental(5, 1);
    for (int64_t p : {7, 11}) {
        check(c5, c5.ref("E").twisted(-v1), "X5 E(x)L_{-w1}", p, 4, "");
        check(c5, c5.ref("Lambda2E").twisted(-v1), "X5 Lambda^2E(x)L_{-w1}", p, 4, "");
    }
    r.detail = os.str();
    return r;
}

inline Result criterion5()
{
    Result r{5, "dot-action identities for p in {5,7,11}", true, {}};
    std::ostringstream os;
    for (int64_t p : {5, 7, 11}) {
        struct Case {
            int n;
            std::vector<int> word;  // rightmost applied first
            Weight lambda, expected;
            const char* tag;
        };
        const std::vector<Case> cases = {
            {4, {2, 1}, Weight{-p, 0, p}, Weight{0, p - 3, 2}, "(p-3)w2+2w3"},
            {4, {2, 3}, Weight{2 * p, 0, -p}, Weight{p + 2, p - 3, 0}, "(p+2)w1+(p-3)w2"},
            {4, {2, 3, 1}, Weight{-p, p, -p}, Weight{1, p - 4, 1}, "w1+(p-4)w2+w3"},
            {5, {3, 2, 1}, Weight{-p, 0, 0, p}, Weight{0, 0, p - 5, 4}, "(p-n)w_{n-2}+(n-1)w_{n-1}, n=5"},
        };
        for (const auto& c : cases) {
            const Weight got = dot_action(WeylElt::from_word(c.n, std::span<const int>(c.word)), c.lambda);
            const bool ok = got == c.expected;
            r.pass = r.pass && ok;
            if (!ok) os << "p=" << p << " " << c.tag << ": got " << got.str() << " expected " << c.expected.str() << "; ";
        }
    }
    r.detail = r.pass ? "all identities reproduced" : os.str();
    return r;
}

inline Result criterion6()
{
    Result r{6, "Euler oracle on 2000 random weights, n = 4", true, {}};
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int64_t> coord(-12, 12);
    std::vector<Weight> ws;
    for (int i = 0; i < 2000; ++i) ws.push_back(Weight{coord(rng), coord(rng), coord(rng)});
    std::ostringstream os;
    for (int64_t p : {5, 7}) {
        int determined = 0, bad = 0;
        for (const auto& w : ws) {
            const auto [info, cert] = coh_line_charp(w, p);
            if (info.is_bounded()) continue;
            ++determined;
            const BigInt chi = euler_char(w);
            if ((info.is_acyclic() && chi != 0) || (info.is_determined() && info.alternating_sum() != chi)) ++bad;
        }
        r.pass = r.pass && bad == 0;
        os << "p=" << p << ": determined " << determined << "/2000 (" << (determined * 100 / 2000) << "%), mismatches "
           << bad << "; ";
    }
    r.detail = os.str();
    return r;
}

inline Result criterion7(int threads)
{
    Result r{7, "Gram matrices and right duals", true, {}};
    std::ostringstream os;
    for (Variety v : {Variety::X4, Variety::X5}) {
        const auto c = build_collection(v);
        const auto g = gram(c, threads);
        const bool tri = g.is_unitriangular(), uni = g.is_unimodular();
        bool delta = tri;
        RightDualBasis d;
        if (tri) {
            d = right_dual_basis(c, g);
            const auto cls = c.classes();
            for (std::size_t j = 0; j < cls.size() && delta; ++j)
                for (std::size_t i = 0; i < cls.size() && delta; ++i)
                    delta = euler_pairing(d.classes[j], cls[i]) == (i == j ? 1 : 0);
        }
        os << variety_name(v) << ": " << g.size() << "x" << g.size() << " unitriangular " << tri << " unimodular "
           << uni << " delta " << delta;
        bool match = true;
        if (tri) {
            const auto& cat = *c.catalog;
            const auto objs = c.flat();
            const auto dual_of = [&](const std::string& obj, const std::string& bundle) {
                for (std::size_t j = 0; j < objs.size(); ++j)
                    if (objs[j]->name == obj) {
                        const int s = k_sign(d.classes[j], cat.kclass(cat.ref(bundle)));
                        os << " " << bundle << (s != 0 ? " matches" : " differs") << " (rank "
                           << abs(d.classes[j].rank()) << " vs " << cat.kclass(cat.ref(bundle)).rank() << ")";
                        return s != 0;
                    }
                return false;
            };
            if (v == Variety::X4) match = dual_of("E(x)L(-1,0,0)", "G~");
            else {
                const bool h = dual_of("E(x)L(-1,0,0,0)", "H~");
                const bool k = dual_of("Lambda2E(x)L(-1,0,0,0)", "K~");
                match = h && k;
            }
        }
        os << "; ";
        r.pass = r.pass && tri && uni && delta && match;
    }
    r.detail = os.str();
    return r;
}

inline Result criterion8()
{
    Result r{8, "mutation laws at K-level", true, {}};
    const auto c = build_collection(Variety::X4);
    const auto objs = c.flat();
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
        std::size_t i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        if (i > j) std::swap(i, j);
        ExcCollection sub;
        sub.n = c.n;
        sub.blocks = {CollectionBlock{"E", "", 1, {*objs[i]}}, CollectionBlock{"F", "", 0, {*objs[j]}}};
        const auto back = mutate_block_right_k(mutate_block_left_k(sub, 1), 1);
        if (k_equal(back.blocks[0].objects[0].kclass, objs[i]->kclass) &&
            k_equal(back.blocks[1].objects[0].kclass, objs[j]->kclass))
            ++ok;
    }
    // completely orthogonal neighbours: two objects of one block, split into blocks
    bool swap_ok = true;
    int orth_pairs = 0;
    for (const auto& b : c.blocks)
        for (std::size_t a = 0; a + 1 < b.objects.size(); ++a) {
            ExcCollection sub;
            sub.n = c.n;
            sub.blocks = {CollectionBlock{"X", "", 1, {b.objects[a]}}, CollectionBlock{"Y", "", 0, {b.objects[a + 1]}}};
            if (!completely_orthogonal(sub, 1)) continue;
            ++orth_pairs;
            const auto m = mutate_block_left_k(sub, 1);
            swap_ok = swap_ok && k_equal(m.blocks[0].objects[0].kclass, b.objects[a + 1].kclass) &&
                      k_equal(m.blocks[1].objects[0].kclass, b.objects[a].kclass);
        }
    r.pass = ok == 100 && swap_ok && orth_pairs > 0;
    r.detail = "right o left = id on " + std::to_string(ok) + "/100 pairs; pure swap on " + std::to_string(orth_pairs) +
               " orthogonal neighbours " + (swap_ok ? "ok" : "FAIL");
    return r;
}

inline Result criterion9(int threads)
{
    Result r{9, "conjecture cross-check", true, {}};
    std::ostringstream os;
    for (auto [n, p] : {std::pair{4, 5}, std::pair{5, 7}}) {
        const auto cr = conjecture_check(n, p, threads);
        const auto dr = decompose(n == 4 ? Variety::X4 : Variety::X5, p, threads);
        const bool same = io::to_json(cr.decomposition).dump() == io::to_json(dr).dump();
        r.pass = r.pass && same;
        os << "(" << n << "," << p << ") reproduces decompose: " << (same ? "yes" : "no") << "; ";
    }
    const auto c6 = conjecture_check(6, 7, threads);
    const bool complete = c6.object_count == 30 && c6.count_ok && c6.gram_unitriangular &&
                          c6.objects.size() == c6.object_count && c6.decomposition.summands.size() == 30 &&
                          c6.conditional_identity.rhs == ipow(BigInt(7), 9) && !c6.flags.empty() &&
                          c6.concentrated <= c6.object_count &&
                          c6.identity_conditional == (c6.concentrated < c6.object_count);
    r.pass = r.pass && complete;
    os << "(6,7): " << c6.object_count << " objects, unitriangular " << c6.gram_unitriangular << ", concentrated "
       << c6.concentrated << ", identity " << c6.conditional_identity.lhs << "/" << c6.conditional_identity.rhs
       << (c6.identity_conditional ? " (conditional)" : "");
    r.detail = os.str();
    return r;
}

inline std::vector<Result> run_all(int threads)
{
    return {criterion1(threads), criterion2(threads), criterion3(threads), criterion4(),        criterion5(),
            criterion6(),        criterion7(threads), criterion8(),        criterion9(threads)};
}

inline std::string format(const Result& r)
{
    return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " -- " +
           r.detail;
}

}  // namespace flagfrob::acceptance

#endif  // FLAGFROB_ACCEPTANCE_HPP_
