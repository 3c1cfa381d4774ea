#ifndef FLAGFROB_SHEAVES_HPP_
#define FLAGFROB_SHEAVES_HPP_

// Homogeneous bundles on SL_n/B (pullbacks from the incidence variety X_n and
// a few bundles that only live on G/B) as formal expressions with K-classes,
// B-characters and exact-sequence presentations.

#include "kclass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagfrob {

class UnsupportedVariety : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PresentationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// (base)^{*?} (x) L_twist. The base "O" is the structure sheaf, so
/// {"O", false, lambda} is the line bundle L_lambda.
struct BundleRef {
    std::string base = "O";
    bool dual = false;
    Weight twist;

    static BundleRef line(const Weight& w) { return BundleRef{"O", false, w}; }
    static BundleRef of(std::string base, int n) { return BundleRef{std::move(base), false, Weight::zero(n)}; }

    [[nodiscard]] bool is_line() const { return base == "O"; }

    [[nodiscard]] BundleRef dualized() const
    {
        BundleRef r{base, is_line() ? false : !dual, -twist};
        return r;
    }
    [[nodiscard]] BundleRef twisted(const Weight& w) const { return BundleRef{base, dual, twist + w}; }

    [[nodiscard]] std::string name() const
    {
        if (is_line()) return twist.is_zero() ? "O" : "L" + twist.str();
        std::string s = dual ? "(" + base + ")^*" : base;
        if (!twist.is_zero()) s += "(x)L" + twist.str();
        return s;
    }

    friend auto operator<=>(const BundleRef&, const BundleRef&) = default;
    friend bool operator==(const BundleRef&, const BundleRef&) = default;
};

/// module (x) bundle, where module is a G-module given by its character
/// (its dimension is the only thing cohomology sees).
struct Term {
    KClass module;
    BundleRef bundle;

    [[nodiscard]] BigInt mult() const { return module.rank(); }
};

enum class PresKind {
    Exact,       ///< 0 -> T_0 -> ... -> T_m -> 0, object at position self
    Filtration,  ///< graded pieces, sub first
    Iso,         ///< object isomorphic to the single term
};

inline const char* pres_kind_name(PresKind k)
{
    switch (k) {
    case PresKind::Exact: return "exact";
    case PresKind::Filtration: return "filtration";
    case PresKind::Iso: return "iso";
    }
    return "?";
}

struct Presentation {
    PresKind kind = PresKind::Exact;
    std::vector<std::vector<Term>> terms;  ///< for Exact, terms[self] is empty
    int self = -1;
    std::string anchor;
};

struct BaseBundle {
    std::string name;
    std::string display;
    KClass kclass;
    std::optional<KClass> character;
    std::vector<Presentation> presentations;
    std::string anchor;
    bool nonsplit = false;
};

/// A materialized bundle expression.
struct BundleExpr {
    BundleRef ref;
    std::string name;
    KClass kclass;
    std::optional<KClass> character;
    std::vector<Presentation> presentations;
    std::string anchor;
    bool nonsplit = false;

    [[nodiscard]] BigInt rank() const { return kclass.rank(); }
};

inline KClass term_class(const std::vector<Term>& ts, const std::function<KClass(const BundleRef&)>& cls, int n)
{
    KClass k(n);
    for (const auto& t : ts) k += cls(t.bundle) * t.mult();
    return k;
}

//-----------------------------------------------------------------------------
class Catalog {
    int n_;
    std::map<std::string, BaseBundle> bases_;
    std::vector<std::string> order_;
    std::map<std::string, BundleRef> aliases_;  ///< named derived objects
    std::vector<std::string> alias_order_;

public:
    explicit Catalog(int n) : n_(n)
    {
        BaseBundle o;
        o.name = "O";
        o.display = "O";
        o.kclass = KClass::trivial(n);
        o.character = KClass::trivial(n);
        o.anchor = "structure sheaf";
        add_base(std::move(o));
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] bool has(const std::string& name) const { return bases_.count(name) || aliases_.count(name); }
    [[nodiscard]] const std::vector<std::string>& base_names() const noexcept { return order_; }
    [[nodiscard]] const std::vector<std::string>& alias_names() const noexcept { return alias_order_; }
    [[nodiscard]] const BaseBundle& base(const std::string& name) const
    {
        auto it = bases_.find(name);
        if (it == bases_.end()) throw std::out_of_range("unknown bundle " + name);
        return it->second;
    }

    BaseBundle& base_mut(const std::string& name)
    {
        auto it = bases_.find(name);
        if (it == bases_.end()) throw std::out_of_range("unknown bundle " + name);
        return it->second;
    }

    void add_base(BaseBundle b)
    {
        const std::string name = b.name;
        if (!bases_.emplace(name, std::move(b)).second) throw std::logic_error("duplicate bundle " + name);
        order_.push_back(name);
    }
    void add_alias(const std::string& name, const BundleRef& r)
    {
        aliases_.emplace(name, r);
        alias_order_.push_back(name);
    }

    /// Resolves a catalog name (base or named derived object).
    [[nodiscard]] BundleRef ref(const std::string& name) const
    {
        if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
        (void)base(name);
        return BundleRef::of(name, n_);
    }

    [[nodiscard]] KClass kclass(const BundleRef& r) const
    {
        KClass k = base(r.base).kclass;
        if (r.dual) k = k.dual();
        return k.twist(r.twist);
    }

    [[nodiscard]] std::optional<KClass> character(const BundleRef& r) const
    {
        const auto& b = base(r.base);
        if (!b.character) return std::nullopt;
        KClass k = *b.character;
        if (r.dual) k = k.dual();
        return k.twist(r.twist);
    }

    [[nodiscard]] BundleExpr expr(const BundleRef& r) const
    {
        const auto& b = base(r.base);
        BundleExpr e;
        e.ref = r;
        e.name = r.name();
        e.kclass = kclass(r);
        e.character = character(r);
        e.anchor = b.anchor;
        e.nonsplit = b.nonsplit;
        for (const auto& pr : b.presentations) e.presentations.push_back(transform(pr, r));
        return e;
    }

    [[nodiscard]] BundleExpr expr(const std::string& name) const
    {
        BundleExpr e = expr(ref(name));
        if (aliases_.count(name)) e.name = name;
        return e;
    }

    /// Alternating K-class sum of a presentation minus the object; zero when exact.
    [[nodiscard]] KClass presentation_defect(const BundleExpr& e, const Presentation& pr) const
    {
        auto cls = [this](const BundleRef& r) { return kclass(r); };
        KClass acc(n_);
        switch (pr.kind) {
        case PresKind::Exact:
            for (std::size_t j = 0; j < pr.terms.size(); ++j) {
                KClass t = static_cast<int>(j) == pr.self ? e.kclass : term_class(pr.terms[j], cls, n_);
                if (j % 2 == 0) acc += t;
                else acc -= t;
            }
            break;
        case PresKind::Filtration:
            for (const auto& piece : pr.terms) acc += term_class(piece, cls, n_);
            acc -= e.kclass;
            break;
        case PresKind::Iso:
            acc = term_class(pr.terms.at(0), cls, n_) - e.kclass;
            break;
        }
        return acc;
    }

    /// Checks every presentation of every base bundle in K_0; throws on failure.
    void verify_presentations() const
    {
        for (const auto& name : order_) {
            const BundleExpr e = expr(BundleRef::of(name, n_));
            for (std::size_t i = 0; i < e.presentations.size(); ++i) {
                const auto& pr = e.presentations[i];
                if (pr.kind == PresKind::Exact && pr.terms.size() < 3)
                    throw PresentationError(name + ": exact presentation shorter than 3 terms");
                if (!k_equal(presentation_defect(e, pr), KClass(n_)))
                    throw PresentationError(name + ": presentation " + std::to_string(i) + " (" + pr.anchor +
                                            ") is not K-consistent");
            }
            if (e.character) {
                if (!e.character->is_effective()) throw PresentationError(name + ": character has negative weights");
                if (!k_equal(*e.character, e.kclass)) throw PresentationError(name + ": character does not match K-class");
            }
        }
    }

private:
    [[nodiscard]] Presentation transform(const Presentation& pr, const BundleRef& r) const
    {
        Presentation out = pr;
        for (auto& piece : out.terms)
            for (auto& t : piece) {
                BundleRef b = r.dual ? t.bundle.dualized() : t.bundle;
                t.bundle = b.twisted(r.twist);
                if (r.dual) t.module = t.module.dual();
            }
        if (r.dual && pr.kind != PresKind::Iso) {
            std::reverse(out.terms.begin(), out.terms.end());
            if (pr.kind == PresKind::Exact) out.self = static_cast<int>(pr.terms.size()) - 1 - pr.self;
        }
        return out;
    }
};

//-----------------------------------------------------------------------------
namespace detail {

inline KClass module_char(const Weight& highest) { return KClass::from_character(highest.rank_n(), weyl_character(highest)); }

/// omega_j with omega_0 = omega_n = 0
inline Weight omega_or_zero(int n, int j)
{
    if (j <= 0 || j >= n) return Weight::zero(n);
    return Weight::fundamental(n, j);
}

inline Term term(const KClass& module, const BundleRef& b) { return Term{module, b}; }
inline Term term(int n, const BundleRef& b, BigInt mult = 1) { return Term{KClass::trivial(n, std::move(mult)), b}; }

inline std::string coeff_w(int64_t a, int idx)
{
    return (a == 1 ? std::string() : std::to_string(a)) + "w" + std::to_string(idx);
}

}  // namespace detail

/// Catalog name of the left mutation of L_{i w1 + (k-i) w_{n-1}} through A_0..A_{k-1}.
inline std::string psi_name(int n, int k, int i)
{
    const int m = n - 1;
    const std::string head = "Psi" + std::to_string(k) + "_";
    if (i == k) return head + "w1";
    if (i == 0) return head + "w" + std::to_string(m);
    const int b = k - i;
    return head + detail::coeff_w(i, 1) + (b == 1 ? "" : "+") + detail::coeff_w(b, m);
}

inline std::string psi_display(int n, int k, int i)
{
    const int m = n - 1;
    const std::string head = "Psi" + std::to_string(k) + "^{";
    if (i == k) return head + "w1}";
    if (i == 0) return head + "w" + std::to_string(m) + "}";
    return head + detail::coeff_w(i, 1) + "," + detail::coeff_w(k - i, m) + "}";
}

inline std::string phi_name(int n, int k, int i)
{
    std::string s = psi_name(n, k, i);
    return "Phi" + s.substr(3);
}

inline std::string lambda_e_name(int i) { return i == 1 ? "E" : "Lambda" + std::to_string(i) + "E"; }

/// rho' = w1 + w_{n-1}
inline Weight rho_prime(int n) { return Weight::fundamental(n, 1) + Weight::fundamental(n, n - 1); }

/// Lambda^i E as a reference (i = 0 and i = n-2 are line bundles).
inline BundleRef lambda_e_ref(int n, int i)
{
    if (i == 0) return BundleRef::line(Weight::zero(n));
    if (i == n - 2) return BundleRef::line(Weight::fundamental(n, 1) - Weight::fundamental(n, n - 1));
    return BundleRef::of(lambda_e_name(i), n);
}

/// Psi_k^{i w1, (k-i) w_{n-1}} as a reference (k = 0 is O).
inline BundleRef psi_ref(int n, int k, int i)
{
    if (k == 0) return BundleRef::line(Weight::zero(n));
    return BundleRef::of(psi_name(n, k, i), n);
}

inline Weight a_weight(int n, int k, int i)
{
    return i * Weight::fundamental(n, 1) + (k - i) * Weight::fundamental(n, n - 1);
}

namespace detail {

inline void add_pure_psi(Catalog& cat, int n, int fund)
{
    const Weight w = Weight::fundamental(n, fund);
    const int i_of = fund == 1;  // i index in psi_name: pure w1 has i = k
    // graded pieces of Psi_1: weights of nabla_w minus w
    KClass pieces = module_char(w) - KClass::line(w);
    std::vector<KClass> lines;
    for (const auto& [v, m] : pieces.terms())
        for (BigInt c = 0; c < m; ++c) lines.push_back(KClass::line(v));
    for (int k = 1; k <= n - 2; ++k) {
        BaseBundle b;
        b.name = psi_name(n, k, i_of ? k : 0);
        b.display = psi_display(n, k, i_of ? k : 0);
        b.character = elementary_symmetric(n, lines, k);
        b.anchor = "pullback of Omega^k(k) from P(nabla_w" + std::to_string(fund) + ")";
        // truncated Koszul complex
        Presentation kos;
        kos.kind = PresKind::Exact;
        kos.anchor = "Koszul resolution";
        kos.self = 0;
        kos.terms.emplace_back();
        for (int j = 0; j <= k; ++j) {
            const int top = fund == 1 ? k - j : n - (k - j);
            const KClass mod = (k - j == 0) ? KClass::trivial(n) : module_char(omega_or_zero(n, top));
            kos.terms.push_back({term(mod, BundleRef::line(j * w))});
        }
        KClass cls(n);
        for (int j = 0; j <= k; ++j) {
            const BigInt c = binomial(n, k - j);
            cls += (j % 2 == 0 ? KClass::line(j * w, c) : KClass::line(j * w, -c));
        }
        b.kclass = cls;
        b.presentations.push_back(std::move(kos));
        if (k == 1) {
            Presentation filt;
            filt.kind = PresKind::Filtration;
            filt.anchor = "tautological flag";
            // sub first: for w1 the flag U_1 c ... c U_{n-1} of the quotient V/L
            std::vector<Weight> seq;
            if (fund == 1) {
                seq.push_back(-Weight::fundamental(n, n - 1));
                for (int t = n - 1; t >= 2; --t)
                    seq.push_back(Weight::fundamental(n, t) - Weight::fundamental(n, t - 1));
            } else {
                seq.push_back(-Weight::fundamental(n, 1));
                for (int t = 1; t <= n - 2; ++t)
                    seq.push_back(Weight::fundamental(n, t) - Weight::fundamental(n, t + 1));
            }
            for (const auto& s : seq) filt.terms.push_back({term(n, BundleRef::line(s))});
            b.presentations.push_back(std::move(filt));
        }
        // Lambda^k Psi_1 = (Lambda^{n-1-k} Psi_1)^* (x) det Psi_1, det Psi_1 = L_{-w}
        Presentation iso;
        iso.kind = PresKind::Iso;
        iso.anchor = "exterior-power duality";
        BundleRef partner = BundleRef::of(psi_name(n, n - 1 - k, i_of ? n - 1 - k : 0), n).dualized().twisted(-w);
        iso.terms.push_back({term(n, partner)});
        b.presentations.push_back(std::move(iso));
        cat.add_base(std::move(b));
    }
}

inline void add_mixed_psi(Catalog& cat, int n)
{
    const int m = n - 1;
    for (int k = 2; k <= n - 2; ++k) {
        for (int i = k - 1; i >= 1; --i) {
            const Weight mu = a_weight(n, k, i);
            BaseBundle b;
            b.name = psi_name(n, k, i);
            b.display = psi_display(n, k, i);
            b.anchor = "left mutation of L_{" + coeff_w(i, 1) + "+" + coeff_w(k - i, m) + "} through A_0..A_" +
                       std::to_string(k - 1);
            Presentation res;
            res.kind = PresKind::Exact;
            res.anchor = "mutation resolution";
            res.self = 0;
            res.terms.emplace_back();
            KClass cls(n);
            KClass ch(n);
            bool have_char = true;
            int sign = 1;  // sign of T_j in the expression of the object
            for (int j = k - 1; j >= 0; --j) {
                std::vector<Term> tj;
                for (int a = j; a >= 0; --a) {
                    const Weight nu = a_weight(n, j, a);
                    const Weight diff = mu - nu;
                    if (!diff.is_dominant()) continue;
                    const KClass mod = module_char(diff);
                    const BundleRef br = psi_ref(n, j, a);
                    tj.push_back(term(mod, br));
                    cls += cat.kclass(br) * (mod.rank() * sign);
                    if (auto c = cat.character(br)) ch += mod * *c * BigInt(sign);
                    else have_char = false;
                }
                res.terms.push_back(std::move(tj));
                sign = -sign;
            }
            res.terms.push_back({term(n, BundleRef::line(mu))});
            cls += KClass::line(mu) * BigInt(sign);
            ch += KClass::line(mu) * BigInt(sign);
            b.kclass = cls;
            if (have_char && ch.is_effective()) b.character = ch;
            b.presentations.push_back(std::move(res));
            cat.add_base(std::move(b));
        }
    }
}

inline void add_e_family(Catalog& cat, int n)
{
    const int m = n - 1;
    if (n < 4) return;
    std::vector<KClass> pieces;
    std::vector<Weight> piece_w;
    for (int i = 1; i <= n - 2; ++i) {
        piece_w.push_back(Weight::fundamental(n, i) - Weight::fundamental(n, i + 1));
        pieces.push_back(KClass::line(piece_w.back()));
    }
    const Weight w1 = Weight::fundamental(n, 1);
    const Weight det = w1 - Weight::fundamental(n, m);
    for (int i = 1; i <= n - 3; ++i) {
        BaseBundle b;
        b.name = lambda_e_name(i);
        b.display = i == 1 ? "E" : "Lambda^" + std::to_string(i) + "E";
        b.anchor = i == 1 ? "quotient U_{n-1}/U_1 of tautological bundles" : "exterior power of E";
        b.character = elementary_symmetric(n, pieces, i);
        b.kclass = *b.character;
        // 0 -> Lambda^{i-1}E (x) L_{-w1} -> Psi_i^{w_{n-1}} -> Lambda^i E -> 0
        Presentation def;
        def.kind = PresKind::Exact;
        def.anchor = i == 1 ? "defining sequence of E" : "exterior power of the defining sequence";
        def.self = 2;
        def.terms.push_back({term(n, lambda_e_ref(n, i - 1).twisted(-w1))});
        def.terms.push_back({term(n, psi_ref(n, i, 0))});
        def.terms.emplace_back();
        b.presentations.push_back(std::move(def));
        if (i == 1) {
            Presentation filt;
            filt.kind = PresKind::Filtration;
            filt.anchor = "filtration on G/B";
            for (const auto& w : piece_w) filt.terms.push_back({term(n, BundleRef::line(w))});
            b.presentations.push_back(std::move(filt));
        }
        Presentation iso;
        iso.kind = PresKind::Iso;
        iso.anchor = "Lambda^i E = (Lambda^{n-2-i} E)^* (x) det E";
        iso.terms.push_back({term(n, lambda_e_ref(n, n - 2 - i).dualized().twisted(det))});
        b.presentations.push_back(std::move(iso));
        cat.add_base(std::move(b));
    }
}

inline void add_phi_aliases(Catalog& cat, int n)
{
    const Weight rp = rho_prime(n);
    for (int k = 1; k <= n - 3; ++k)
        for (int i = k; i >= 0; --i) cat.add_alias(phi_name(n, k, i), psi_ref(n, k, i).dualized().twisted(-rp));
}

inline void add_extension(Catalog& cat, int n, const std::string& name, const BundleRef& sub, const BundleRef& quot,
                          const std::string& anchor)
{
    BaseBundle b;
    b.name = name;
    b.display = name;
    b.anchor = anchor;
    b.nonsplit = true;
    b.kclass = cat.kclass(sub) + cat.kclass(quot);
    auto cs = cat.character(sub);
    auto cq = cat.character(quot);
    if (cs && cq) b.character = *cs + *cq;
    Presentation ext;
    ext.kind = PresKind::Exact;
    ext.anchor = "non-split extension";
    ext.self = 1;
    ext.terms.push_back({term(n, sub)});
    ext.terms.emplace_back();
    ext.terms.push_back({term(n, quot)});
    b.presentations.push_back(std::move(ext));
    cat.add_base(std::move(b));
}

}  // namespace detail

/// Named bundles on SL_n/B. Every n >= 4 gets the Psi families (pure and
/// mixed), E and its exterior powers and the Phi objects; n = 4 adds G~ and
/// the auxiliary presentation of Psi2_w1w3, n = 5 adds H~ and K~.
inline Catalog build_catalog(int n)
{
    if (n < 4) throw UnsupportedVariety("catalog requires n >= 4");
    Catalog cat(n);
    const int m = n - 1;
    const Weight w1 = Weight::fundamental(n, 1);
    const Weight wm = Weight::fundamental(n, m);
    const Weight rp = rho_prime(n);
    detail::add_pure_psi(cat, n, 1);
    detail::add_pure_psi(cat, n, m);
    detail::add_mixed_psi(cat, n);
    detail::add_e_family(cat, n);
    detail::add_phi_aliases(cat, n);

    if (n == 4) {
        // G~: 0 -> L_{2w3} -> G~ -> Psi1^{w1} (x) L_{2w1+w3} -> 0
        detail::add_extension(cat, n, "G~", BundleRef::line(2 * wm),
                              BundleRef::of("Psi1_w1", n).twisted(2 * w1 + wm), "rank 4 right dual of E(x)L_{-w1}");
        // auxiliary five-term presentation of Psi2_w1w3
        BaseBundle& target = cat.base_mut("Psi2_w1w3");
        Presentation aux;
        aux.kind = PresKind::Exact;
        aux.anchor = "pushforward of the diagonal resolution";
        const auto dm = [&](const Weight& w) { return detail::module_char(w).dual(); };
        aux.terms.push_back({detail::term(n, BundleRef::line(-2 * rp))});
        aux.terms.push_back({detail::term(dm(rp), BundleRef::line(-rp))});
        aux.terms.push_back({detail::term(dm(wm), BundleRef::of("Psi1_w1", n).dualized().twisted(-rp)),
                             detail::term(dm(w1), BundleRef::of("Psi1_w3", n).dualized().twisted(-rp))});
        aux.terms.push_back({detail::term(detail::module_char(wm), BundleRef::line(-w1)),
                             detail::term(detail::module_char(Weight::fundamental(n, 2)),
                                          BundleRef::of("E", n).twisted(-w1)),
                             detail::term(detail::module_char(w1), BundleRef::line(-wm))});
        aux.terms.emplace_back();
        aux.self = 4;
        target.presentations.push_back(std::move(aux));
    }
    if (n == 5) {
        detail::add_extension(cat, n, "H~", BundleRef::of("Psi2_w1", n).twisted(2 * w1 + 2 * wm),
                              BundleRef::line(3 * w1 + wm), "right dual of E(x)L_{-w1}");
        detail::add_extension(cat, n, "K~", BundleRef::of("Psi2_w4", n).twisted(2 * w1 + 2 * wm),
                              BundleRef::line(w1 + 3 * wm), "right dual of Lambda^2E(x)L_{-w1}");

        // Diagonal-resolution presentations of the mixed objects: expansions of
        // L_{-3w1-3w4}, L_{-2w1-3w4}, L_{-3w1-2w4} in the collection, one block per term.
        using Row = std::vector<std::pair<BundleRef, int>>;
        const auto phi = [&](const char* psi) { return BundleRef::of(psi, n).dualized().twisted(-rp); };
        const auto aux = [&](const std::string& name, const Weight& start, const std::vector<Row>& rows) {
            Presentation pr;
            pr.kind = PresKind::Exact;
            pr.anchor = "pushforward of the diagonal resolution";
            pr.terms.push_back({detail::term(n, BundleRef::line(start))});
            for (const auto& row : rows) {
                std::vector<Term> ts;
                for (const auto& [ref, mult] : row) ts.push_back(detail::term(n, ref, mult));
                pr.terms.push_back(std::move(ts));
            }
            pr.terms.emplace_back();
            pr.self = static_cast<int>(pr.terms.size()) - 1;
            cat.base_mut(name).presentations.push_back(std::move(pr));
        };
        const BundleRef lw1 = BundleRef::line(-w1), lwm = BundleRef::line(-wm);
        const BundleRef e1 = BundleRef::of("E", n).twisted(-w1), e2 = BundleRef::of("Lambda2E", n).twisted(-w1);
        aux("Psi2_w1w4", -3 * rp,
            {{{BundleRef::line(-rp), 200}},
             {{phi("Psi1_w1"), 70}, {phi("Psi1_w4"), 70}},
             {{phi("Psi2_w1"), 15}, {phi("Psi2_w1w4"), 24}, {phi("Psi2_w4"), 15}},
             {{lw1, 50}, {e1, 65}, {e2, 65}, {lwm, 50}},
             {{BundleRef::of("Psi3_2w1w4", n), 5}, {BundleRef::of("Psi3_w1+2w4", n), 5}}});
        aux("Psi3_2w1w4", -2 * w1 - 3 * wm,
            {{{BundleRef::line(-rp), 70}},
             {{phi("Psi1_w1"), 15}, {phi("Psi1_w4"), 24}},
             {{phi("Psi2_w1w4"), 5}, {phi("Psi2_w4"), 5}},
             {{lw1, 10}, {e1, 10}, {e2, 5}, {lwm, 1}}});
        aux("Psi3_w1+2w4", -3 * w1 - 2 * wm,
            {{{BundleRef::line(-rp), 70}},
             {{phi("Psi1_w1"), 24}, {phi("Psi1_w4"), 15}},
             {{phi("Psi2_w1"), 5}, {phi("Psi2_w1w4"), 5}},
             {{lw1, 1}, {e1, 5}, {e2, 10}, {lwm, 10}}});
    }
    cat.verify_presentations();
    return cat;
}

}  // namespace flagfrob

#endif  // FLAGFROB_SHEAVES_HPP_
