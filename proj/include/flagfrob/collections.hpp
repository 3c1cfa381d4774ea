#ifndef FLAGFROB_COLLECTIONS_HPP_
#define FLAGFROB_COLLECTIONS_HPP_

// Exceptional block collections at the level of K_0: Gram matrices, block
// mutations, right duals, and semiorthogonality checks through the
// cohomology solver.

#include "parallel.hpp"
#include "solver.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagfrob {

class NotExceptional : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CollectionObject {
    std::string name;
    std::optional<BundleRef> ref;  ///< catalog object, when the class is a named bundle
    KClass kclass;
};

struct CollectionBlock {
    std::string label;  ///< C_{-k}
    std::string role;   ///< A~_k, B, A_k, or empty
    int degree = 0;     ///< expected cohomological degree of F* of its objects
    std::vector<CollectionObject> objects;
};

struct ExcCollection {
    int n = 0;
    std::vector<CollectionBlock> blocks;
    std::shared_ptr<const Catalog> catalog;

    [[nodiscard]] std::size_t size() const
    {
        std::size_t s = 0;
        for (const auto& b : blocks) s += b.objects.size();
        return s;
    }

    /// (block index, object index) in flattened order.
    [[nodiscard]] std::vector<std::pair<int, int>> positions() const
    {
        std::vector<std::pair<int, int>> out;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t o = 0; o < blocks[b].objects.size(); ++o)
                out.emplace_back(static_cast<int>(b), static_cast<int>(o));
        return out;
    }

    [[nodiscard]] std::vector<const CollectionObject*> flat() const
    {
        std::vector<const CollectionObject*> out;
        for (const auto& b : blocks)
            for (const auto& o : b.objects) out.push_back(&o);
        return out;
    }

    [[nodiscard]] std::vector<KClass> classes() const
    {
        std::vector<KClass> out;
        for (const auto* o : flat()) out.push_back(o->kclass);
        return out;
    }
};

inline CollectionObject collection_object(const Catalog& cat, const BundleRef& r, std::string name = {})
{
    return CollectionObject{name.empty() ? r.name() : std::move(name), r, cat.kclass(r)};
}

//-----------------------------------------------------------------------------
// Euler pairing and Gram matrices

inline BigInt euler_pairing(const BundleExpr& a, const BundleExpr& b) { return euler_pairing(a.kclass, b.kclass); }
inline BigInt euler_pairing(const CollectionObject& a, const CollectionObject& b)
{
    return euler_pairing(a.kclass, b.kclass);
}

using IntMatrix = std::vector<std::vector<BigInt>>;

struct GramMatrix {
    IntMatrix m;

    [[nodiscard]] std::size_t size() const { return m.size(); }

    /// Ones on the diagonal, zeros below it.
    [[nodiscard]] bool is_unitriangular() const
    {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i][i] != 1) return false;
            for (std::size_t j = 0; j < i; ++j)
                if (m[i][j] != 0) return false;
        }
        return true;
    }

    [[nodiscard]] BigInt determinant() const;
    [[nodiscard]] bool is_unimodular() const
    {
        const BigInt d = determinant();
        return d == 1 || d == -1;
    }
};

namespace detail {

/// Fraction-free (Bareiss) determinant.
inline BigInt bareiss_det(IntMatrix a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace detail

inline BigInt GramMatrix::determinant() const { return detail::bareiss_det(m); }

inline GramMatrix gram(const std::vector<KClass>& cls, int threads = 1)
{
    const std::size_t n = cls.size();
    GramMatrix g;
    g.m.assign(n, std::vector<BigInt>(n));
    // dual classes once; pairing = chi(dual(a) * b)
    std::vector<KClass> duals;
    duals.reserve(n);
    for (const auto& c : cls) duals.push_back(c.dual());
    parallel_for(n * n, threads, [&](std::size_t k) {
        const std::size_t i = k / n, j = k % n;
        g.m[i][j] = euler_char(duals[i] * cls[j]);
    });
    return g;
}

inline GramMatrix gram(const ExcCollection& c, int threads = 1) { return gram(c.classes(), threads); }

/// Pairs of distinct objects in one block with nonzero Euler pairing
/// (either direction); empty for a well-formed block collection.
inline std::vector<std::pair<std::string, std::string>> block_orthogonality_defects(const ExcCollection& c)
{
    std::vector<std::pair<std::string, std::string>> bad;
    for (const auto& b : c.blocks)
        for (std::size_t i = 0; i < b.objects.size(); ++i)
            for (std::size_t j = 0; j < b.objects.size(); ++j)
                if (i != j && euler_pairing(b.objects[i], b.objects[j]) != 0)
                    bad.emplace_back(b.objects[i].name, b.objects[j].name);
    return bad;
}

//-----------------------------------------------------------------------------
// Mutations in K_0

/// [L_X F] = [F] - sum_x chi(x, F)[x] over the mutually orthogonal objects of X.
inline KClass left_mutate(const std::vector<KClass>& block, const KClass& f)
{
    KClass r = f;
    for (const auto& x : block) r -= x * euler_pairing(x, f);
    return r;
}

/// [R_X E] = [E] - sum_x chi(E, x)[x].
inline KClass right_mutate(const std::vector<KClass>& block, const KClass& e)
{
    KClass r = e;
    for (const auto& x : block) r -= x * euler_pairing(e, x);
    return r;
}

namespace detail {

inline std::vector<KClass> block_classes(const CollectionBlock& b)
{
    std::vector<KClass> out;
    for (const auto& o : b.objects) out.push_back(o.kclass);
    return out;
}

inline void check_block_index(const ExcCollection& c, std::size_t i)
{
    if (i == 0 || i >= c.blocks.size())
        throw std::out_of_range("block index " + std::to_string(i) + " outside 1.." + std::to_string(c.blocks.size() - 1));
}

/// Looks the class up among catalog objects (untwisted, dual-untwisted) and
/// the line bundles appearing in the class; sets ref when found.
inline void attach_name(const Catalog* cat, CollectionObject& o, const std::string& fallback)
{
    o.ref.reset();
    o.name = fallback;
    if (o.kclass.size() == 1 && o.kclass.terms().begin()->second == 1) {
        o.ref = BundleRef::line(o.kclass.terms().begin()->first);
        o.name = o.ref->name();
        return;
    }
    if (!cat) return;
    const BigInt r = o.kclass.rank();
    for (const auto& name : cat->base_names()) {
        const BundleRef ref = BundleRef::of(name, cat->n());
        const KClass k = cat->kclass(ref);
        if (k.rank() != r) continue;
        if (k_equal(k, o.kclass)) {
            o.ref = ref;
            o.name = name;
            return;
        }
    }
}

}  // namespace detail

/// Replaces block i by its left mutation through block i-1 and swaps the two
/// (tau_i). Objects whose mutated class is a catalog bundle get its name.
inline ExcCollection mutate_block_left_k(const ExcCollection& c, std::size_t i)
{
    detail::check_block_index(c, i);
    ExcCollection out = c;
    const auto through = detail::block_classes(c.blocks[i - 1]);
    CollectionBlock mutated = c.blocks[i];
    for (auto& o : mutated.objects) {
        o.kclass = left_mutate(through, o.kclass);
        detail::attach_name(c.catalog.get(), o, "L<" + c.blocks[i - 1].label + ">(" + o.name + ")");
    }
    out.blocks[i - 1] = std::move(mutated);
    out.blocks[i] = c.blocks[i - 1];
    std::swap(out.blocks[i - 1].label, out.blocks[i].label);
    std::swap(out.blocks[i - 1].degree, out.blocks[i].degree);
    return out;
}

/// Replaces block i-1 by its right mutation through block i and swaps.
inline ExcCollection mutate_block_right_k(const ExcCollection& c, std::size_t i)
{
    detail::check_block_index(c, i);
    ExcCollection out = c;
    const auto through = detail::block_classes(c.blocks[i]);
    CollectionBlock mutated = c.blocks[i - 1];
    for (auto& o : mutated.objects) {
        o.kclass = right_mutate(through, o.kclass);
        detail::attach_name(c.catalog.get(), o, "R<" + c.blocks[i].label + ">(" + o.name + ")");
    }
    out.blocks[i] = std::move(mutated);
    out.blocks[i - 1] = c.blocks[i];
    std::swap(out.blocks[i - 1].label, out.blocks[i].label);
    std::swap(out.blocks[i - 1].degree, out.blocks[i].degree);
    return out;
}

/// Blocks i-1 and i with chi = 0 in both directions between them.
inline bool completely_orthogonal(const ExcCollection& c, std::size_t i)
{
    detail::check_block_index(c, i);
    for (const auto& a : c.blocks[i - 1].objects)
        for (const auto& b : c.blocks[i].objects)
            if (euler_pairing(a, b) != 0 || euler_pairing(b, a) != 0) return false;
    return true;
}

//-----------------------------------------------------------------------------
// Right duals

struct RightDualBasis {
    std::vector<KClass> classes;     ///< F_j with chi(F_j, E_i) = delta_ij
    std::vector<int> expected_shift; ///< -k for an object of block C_{-k}
    IntMatrix coefficients;          ///< F_j = sum_k coefficients[j][k] E_k
};

/// Inverse of an upper unitriangular integer matrix.
inline IntMatrix unitriangular_inverse(const IntMatrix& g)
{
    const std::size_t n = g.size();
    IntMatrix x(n, std::vector<BigInt>(n));
    for (std::size_t j = n; j-- > 0;) {
        x[j][j] = 1;
        for (std::size_t i = j; i-- > 0;) {
            BigInt s = 0;
            for (std::size_t k = i + 1; k <= j; ++k) s += g[i][k] * x[k][j];
            x[i][j] = -s;
        }
    }
    return x;
}

inline RightDualBasis right_dual_basis(const ExcCollection& c, const GramMatrix& g)
{
    if (!g.is_unitriangular()) throw NotExceptional("Gram matrix is not unitriangular");
    RightDualBasis r;
    r.coefficients = unitriangular_inverse(g.m);
    const auto cls = c.classes();
    for (std::size_t j = 0; j < cls.size(); ++j) {
        KClass f(c.n);
        for (std::size_t k = 0; k < cls.size(); ++k)
            if (r.coefficients[j][k] != 0) f += cls[k] * r.coefficients[j][k];
        r.classes.push_back(std::move(f));
    }
    for (const auto& b : c.blocks)
        for (std::size_t o = 0; o < b.objects.size(); ++o) r.expected_shift.push_back(-b.degree);
    return r;
}

inline RightDualBasis right_dual_basis(const ExcCollection& c, int threads = 1)
{
    return right_dual_basis(c, gram(c, threads));
}

//-----------------------------------------------------------------------------
// Lattice spans

/// Row Hermite normal form (positive pivots, reduced above), zero rows dropped.
inline IntMatrix hermite_normal_form(IntMatrix a)
{
    if (a.empty()) return a;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        // Euclid on column col over rows >= row
        for (;;) {
            std::size_t piv = a.size();
            for (std::size_t r = row; r < a.size(); ++r)
                if (a[r][col] != 0 && (piv == a.size() || abs(a[r][col]) < abs(a[piv][col]))) piv = r;
            if (piv == a.size()) break;
            std::swap(a[row], a[piv]);
            bool done = true;
            for (std::size_t r = row + 1; r < a.size(); ++r) {
                if (a[r][col] == 0) continue;
                const BigInt q = a[r][col] / a[row][col];
                for (std::size_t k = col; k < cols; ++k) a[r][k] -= q * a[row][k];
                if (a[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (row >= a.size() || a[row][col] == 0) continue;
        if (a[row][col] < 0)
            for (auto& v : a[row]) v = -v;
        for (std::size_t r = 0; r < row; ++r) {
            BigInt q = a[r][col] / a[row][col];
            if (a[r][col] - q * a[row][col] < 0) q -= 1;
            if (q != 0)
                for (std::size_t k = col; k < cols; ++k) a[r][k] -= q * a[row][k];
        }
        ++row;
    }
    a.resize(row);
    return a;
}

/// Coordinates of x in the basis E with right dual F: x = sum_k chi(F_k, x) E_k.
inline std::vector<BigInt> coordinates(const RightDualBasis& dual, const KClass& x)
{
    std::vector<BigInt> v;
    for (const auto& f : dual.classes) v.push_back(euler_pairing(f, x));
    return v;
}

/// The integer row spans of a and b coincide.
inline bool same_span(const IntMatrix& a, const IntMatrix& b) { return hermite_normal_form(a) == hermite_normal_form(b); }

/// Classes of c and d span the same sublattice of K_0, measured in the basis
/// given by c (which must be exceptional).
inline bool same_span(const ExcCollection& c, const ExcCollection& d)
{
    const auto dual = right_dual_basis(c);
    IntMatrix a, b;
    for (const auto& x : c.classes()) a.push_back(coordinates(dual, x));
    for (const auto& x : d.classes()) {
        auto v = coordinates(dual, x);
        KClass back(c.n);
        const auto cls = c.classes();
        for (std::size_t k = 0; k < v.size(); ++k) back += cls[k] * v[k];
        if (!k_equal(back, x)) return false;  // outside the span of c
        b.push_back(std::move(v));
    }
    return same_span(a, b);
}

//-----------------------------------------------------------------------------
// Semiorthogonality

enum class PairStatus { VerifiedZero, EulerZeroUnknown, Violation };

inline const char* pair_status_name(PairStatus s)
{
    switch (s) {
    case PairStatus::VerifiedZero: return "verified-zero";
    case PairStatus::EulerZeroUnknown: return "euler-zero-unknown";
    case PairStatus::Violation: return "violation";
    }
    return "?";
}

struct PairCheck {
    int from = 0;  ///< Hom^*(objects[from], objects[to])
    int to = 0;
    std::string from_name, to_name;
    bool within_block = false;
    BigInt euler = 0;
    PairStatus status = PairStatus::EulerZeroUnknown;
    std::optional<CohInfo> coh;
    std::optional<Certificate> cert;
    std::string note;
};

struct SemiorthogonalityReport {
    int n = 0;
    int64_t p = 0;
    bool conforming = true;  ///< p > 2
    std::vector<PairCheck> pairs;

    [[nodiscard]] std::size_t count(PairStatus s) const
    {
        std::size_t k = 0;
        for (const auto& pc : pairs) k += pc.status == s;
        return k;
    }
    [[nodiscard]] bool has_violation() const { return count(PairStatus::Violation) > 0; }
};

/// dual(a) (x) b as a catalog reference, when one side is a line bundle.
inline std::optional<BundleRef> hom_bundle(const BundleRef& a, const BundleRef& b)
{
    if (a.is_line()) return b.twisted(-a.twist);
    if (b.is_line()) return a.dualized().twisted(b.twist);
    return std::nullopt;
}

/// Every Hom^*(later, earlier) pair and both directions inside each block.
/// Cohomology runs without Frobenius twist in characteristic p.
inline SemiorthogonalityReport verify_semiorthogonality(const ExcCollection& c, int64_t p, int threads = 1)
{
    if (p < 2 || !is_prime(p)) throw DomainError("p must be prime");
    SemiorthogonalityReport rep;
    rep.n = c.n;
    rep.p = p;
    rep.conforming = p > 2;
    const auto objs = c.flat();
    const auto pos = c.positions();
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j) {
            const bool same = pos[i].first == pos[j].first;
            if (i == j || (!same && j > i)) continue;
            PairCheck pc;
            pc.from = static_cast<int>(i);
            pc.to = static_cast<int>(j);
            pc.from_name = objs[i]->name;
            pc.to_name = objs[j]->name;
            pc.within_block = same;
            rep.pairs.push_back(std::move(pc));
        }
    parallel_for(rep.pairs.size(), threads, [&](std::size_t k) {
        PairCheck& pc = rep.pairs[k];
        const auto& a = *objs[pc.from];
        const auto& b = *objs[pc.to];
        pc.euler = euler_pairing(a, b);
        if (pc.euler != 0) {
            pc.status = PairStatus::Violation;
            pc.note = "nonzero Euler pairing";
            return;
        }
        std::optional<BundleRef> h;
        if (a.ref && b.ref && c.catalog) h = hom_bundle(*a.ref, *b.ref);
        if (!h) {
            pc.note = "no presentation of the Hom bundle";
            return;
        }
        try {
            auto [info, cert] = solve_presented(*c.catalog, *h, p, false);
            if (info.is_acyclic()) pc.status = PairStatus::VerifiedZero;
            else if (info.is_determined()) pc.status = PairStatus::Violation;
            pc.coh = std::move(info);
            pc.cert = std::move(cert);
        } catch (const InconsistentCohomology& e) {
            pc.note = e.what();
        }
    });
    return rep;
}

}  // namespace flagfrob

#endif  // FLAGFROB_COLLECTIONS_HPP_
