#ifndef FLAGFROB_COH_HPP_
#define FLAGFROB_COH_HPP_

// Cohomology of line bundles on SL_n/B: Borel-Weil-Bott in characteristic 0
// and a certified search over Andersen-type reflection moves in
// characteristic p.

#include "kclass.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace flagfrob {

struct DegreeEntry {
    std::optional<Weight> label;  ///< highest weight of the G-module, if known
    BigInt dim;
    friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

class CohInfo {
public:
    enum class Kind { Determined, Acyclic, Bounded };

    Kind kind = Kind::Bounded;
    BigInt euler = 0;
    std::map<int, DegreeEntry> degrees;  ///< Determined only
    std::set<int> support;               ///< Bounded only
    std::map<int, BigInt> upper;         ///< Bounded only; missing degree = unbounded

    static CohInfo acyclic()
    {
        CohInfo c;
        c.kind = Kind::Acyclic;
        return c;
    }
    static CohInfo single(int degree, BigInt dim, std::optional<Weight> label = std::nullopt)
    {
        CohInfo c;
        c.kind = Kind::Determined;
        c.euler = (degree % 2 == 0) ? dim : BigInt(-dim);
        c.degrees.emplace(degree, DegreeEntry{std::move(label), std::move(dim)});
        return c;
    }

    [[nodiscard]] bool is_determined() const { return kind == Kind::Determined; }
    [[nodiscard]] bool is_acyclic() const { return kind == Kind::Acyclic; }
    [[nodiscard]] bool is_bounded() const { return kind == Kind::Bounded; }

    /// Degrees where cohomology may be nonzero.
    [[nodiscard]] std::set<int> possible_support() const
    {
        if (kind == Kind::Acyclic) return {};
        if (kind == Kind::Bounded) return support;
        std::set<int> s;
        for (const auto& [d, e] : degrees) s.insert(d);
        return s;
    }

    /// Exactly one possibly-nonzero degree, and it is nonzero.
    [[nodiscard]] std::optional<int> concentrated_degree() const
    {
        if (kind != Kind::Determined || degrees.size() != 1) return std::nullopt;
        return degrees.begin()->first;
    }

    [[nodiscard]] BigInt alternating_sum() const
    {
        BigInt s = 0;
        for (const auto& [d, e] : degrees) s += (d % 2 == 0) ? e.dim : BigInt(-e.dim);
        return s;
    }

    friend bool operator==(const CohInfo&, const CohInfo&) = default;

    [[nodiscard]] std::string str() const
    {
        std::ostringstream os;
        switch (kind) {
        case Kind::Acyclic: os << "acyclic"; break;
        case Kind::Determined: {
            os << "determined{";
            bool first = true;
            for (const auto& [d, e] : degrees) {
                os << (first ? "" : ", ") << "H^" << d << " = " << e.dim;
                if (e.label) os << " [" << e.label->str() << "]";
                first = false;
            }
            os << "}";
            break;
        }
        case Kind::Bounded: {
            os << "bounded{support ";
            bool first = true;
            for (int d : support) {
                os << (first ? "" : ",") << d;
                first = false;
            }
            os << "; euler " << euler << "}";
            break;
        }
        }
        return os.str();
    }
};

//-----------------------------------------------------------------------------
/// H^i(root) = H^{shift + sign*i}(mu)
struct LineState {
    Weight mu;
    int shift = 0;
    int sign = 1;
    friend auto operator<=>(const LineState&, const LineState&) = default;
};

enum class StepKind {
    KempfVanishing,
    SimpleWallAcyclic,
    AndersenUp,    ///< bottom-alcove reflection, read toward dominance
    AndersenDown,  ///< Andersen reflection, pairing >= -p or = -a p^m - 1
    SerreDuality,
    TopBottomVanishing,  ///< H^0 = 0 off the dominant cone, or H^N = 0 via duality
    EulerPromotion,      ///< a single surviving degree carries (-1)^d chi
    LESStep,
    MultiPresentationIntersect,
};

inline const char* step_name(StepKind k)
{
    switch (k) {
    case StepKind::KempfVanishing: return "KempfVanishing";
    case StepKind::SimpleWallAcyclic: return "SimpleWallAcyclic";
    case StepKind::AndersenUp: return "AndersenUp";
    case StepKind::AndersenDown: return "AndersenDown";
    case StepKind::SerreDuality: return "SerreDuality";
    case StepKind::TopBottomVanishing: return "TopBottomVanishing";
    case StepKind::EulerPromotion: return "EulerPromotion";
    case StepKind::LESStep: return "LESStep";
    case StepKind::MultiPresentationIntersect: return "MultiPresentationIntersect";
    }
    return "?";
}

struct Step {
    StepKind kind{};
    int alpha = 0;  ///< simple root index (1-based) for reflection and wall steps
    LineState from;
    LineState to;
    int degree = -1;  ///< degree of the root object affected (terminal / vanishing steps)
    // exact-sequence steps
    int constraint = -1;
    int node = -1;
    int presentation = -1;
    uint32_t mask = 0;
    std::map<int, BigInt> bounds;
    std::string note;
};

struct SolveTrace;  // defined with the presented-bundle solver

struct Certificate {
    std::string subject;
    int n = 0;
    int64_t p = 0;
    Weight root;
    std::vector<Step> steps;
    std::shared_ptr<const SolveTrace> trace;

    [[nodiscard]] std::string render() const
    {
        std::ostringstream os;
        os << subject << '\n';
        int i = 0;
        for (const auto& s : steps) {
            os << "  " << ++i << ". " << step_name(s.kind);
            switch (s.kind) {
            case StepKind::AndersenUp:
            case StepKind::AndersenDown:
                os << " s" << s.alpha << ": " << s.from.mu.str() << " -> " << s.to.mu.str();
                break;
            case StepKind::SerreDuality:
                os << ": " << s.from.mu.str() << " -> " << s.to.mu.str();
                break;
            case StepKind::SimpleWallAcyclic:
                os << " alpha" << s.alpha << " at " << s.from.mu.str();
                break;
            case StepKind::KempfVanishing:
                os << " at " << s.from.mu.str() << ", degree " << s.degree;
                break;
            case StepKind::TopBottomVanishing:
            case StepKind::EulerPromotion:
                os << " degree " << s.degree;
                break;
            default:
                break;
            }
            if (!s.note.empty()) os << " (" << s.note << ")";
            os << '\n';
        }
        return os.str();
    }
};

//-----------------------------------------------------------------------------
inline CohInfo coh_line_char0(const Weight& lambda)
{
    auto r = make_dominant_dot(lambda);
    if (std::holds_alternative<Singular>(r)) return CohInfo::acyclic();
    const auto& reg = std::get<Regular>(r);
    return CohInfo::single(reg.w.length(), weyl_dim(reg.dominant), reg.dominant);
}

namespace detail {

inline bool is_power_form(int64_t c, int64_t p)
{
    // c = -a p^m - 1 with 1 <= a < p, m >= 1
    if (c >= -1) return false;
    int64_t v = -(c + 1);
    if (v % p != 0) return false;
    while (v % p == 0) v /= p;
    return v >= 1 && v < p;
}

inline int64_t pow_sat(int64_t p, int e)
{
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

/// Which reflection rule moves mu at alpha_k toward dominance, if any.
inline std::optional<StepKind> reflection_move(const Weight& mu, int k, int64_t p)
{
    const int64_t c = mu[k - 1];
    if (c + 1 >= 0) return std::nullopt;
    if (c >= -p || is_power_form(c, p)) return StepKind::AndersenDown;
    if (c + 1 >= -p) return StepKind::AndersenUp;
    return std::nullopt;
}

inline Weight serre_dual_weight(const Weight& mu)
{
    return Weight::zero(mu.rank_n()) - 2 * Weight::rho(mu.rank_n()) - mu;
}

inline int root_degree(const LineState& s, int target)
{
    // shift + sign*i = target
    return s.sign * (target - s.shift);
}

struct LineMemo {
    std::mutex mu;
    std::map<std::tuple<int, int64_t, Weight>, std::pair<CohInfo, Certificate>> table;

    static LineMemo& instance()
    {
        static LineMemo m;
        return m;
    }
};

}  // namespace detail

inline std::pair<CohInfo, Certificate> coh_line_charp_uncached(const Weight& lambda, int64_t p)
{
    const int n = lambda.rank_n();
    const int N = n * (n - 1) / 2;
    Certificate cert;
    cert.n = n;
    cert.p = p;
    cert.root = lambda;
    cert.subject = "L" + lambda.str() + " on SL_" + std::to_string(n) + "/B, p = " + std::to_string(p);

    const BigInt chi = euler_char(lambda);

    int64_t budget = 1;
    for (int i = 2; i <= n; ++i) budget *= i;
    budget *= (n - 1);

    std::set<int> excluded;
    std::map<LineState, std::pair<int, Step>> parent;  // state -> (has parent, step that produced it)

    auto path_to = [&](const LineState& s) {
        std::vector<Step> path;
        LineState cur = s;
        while (true) {
            auto it = parent.find(cur);
            if (it == parent.end() || !it->second.first) break;
            path.push_back(it->second.second);
            cur = it->second.second.from;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::vector<Step> vanishing_steps;
    std::set<LineState> used_for_vanishing;

    auto note_vanishing = [&](const LineState& s) {
        // H^0(mu) = 0 unless mu dominant; H^N(mu) = 0 unless -2rho-mu dominant
        if (!s.mu.is_dominant()) {
            const int d = detail::root_degree(s, 0);
            if (d >= 0 && d <= N && !excluded.count(d)) {
                excluded.insert(d);
                used_for_vanishing.insert(s);
                Step st;
                st.kind = StepKind::TopBottomVanishing;
                st.from = s;
                st.to = s;
                st.degree = d;
                st.note = "H^0 of a non-dominant weight";
                vanishing_steps.push_back(st);
            }
        }
        if (!detail::serre_dual_weight(s.mu).is_dominant()) {
            const int d = detail::root_degree(s, N);
            if (d >= 0 && d <= N && !excluded.count(d)) {
                excluded.insert(d);
                used_for_vanishing.insert(s);
                Step st;
                st.kind = StepKind::TopBottomVanishing;
                st.from = s;
                st.to = s;
                st.degree = d;
                st.note = "H^top vanishes: -2rho-mu is not dominant";
                vanishing_steps.push_back(st);
            }
        }
    };

    auto search = [&](const LineState& start) -> std::optional<std::pair<CohInfo, Certificate>> {
        std::deque<LineState> q{start};
        while (!q.empty() && budget > 0) {
            LineState s = q.front();
            q.pop_front();
            --budget;
            if (s.mu.is_dominant()) {
                const int d = detail::root_degree(s, 0);
                Certificate c = cert;
                c.steps = path_to(s);
                Step st;
                st.kind = StepKind::KempfVanishing;
                st.from = s;
                st.to = s;
                st.degree = d;
                c.steps.push_back(st);
                if (d < 0 || d > N) throw std::logic_error("Kempf terminal outside degree range");
                Weight label = s.sign > 0 ? s.mu : s.mu.reversed();
                return std::make_pair(CohInfo::single(d, weyl_dim(s.mu), label), c);
            }
            for (int k = 1; k <= n - 1; ++k) {
                if (s.mu[k - 1] == -1) {
                    Certificate c = cert;
                    c.steps = path_to(s);
                    Step st;
                    st.kind = StepKind::SimpleWallAcyclic;
                    st.alpha = k;
                    st.from = s;
                    st.to = s;
                    c.steps.push_back(st);
                    return std::make_pair(CohInfo::acyclic(), c);
                }
            }
            note_vanishing(s);
            for (int k = 1; k <= n - 1; ++k) {
                auto mv = detail::reflection_move(s.mu, k, p);
                if (!mv) continue;
                LineState t{simple_dot(k, s.mu), s.shift - 1, s.sign};
                if (parent.count(t)) continue;
                Step st;
                st.kind = *mv;
                st.alpha = k;
                st.from = s;
                st.to = t;
                parent.emplace(t, std::make_pair(1, st));
                q.push_back(t);
            }
        }
        return std::nullopt;
    };

    const LineState root{lambda, 0, 1};
    parent.emplace(root, std::make_pair(0, Step{}));
    if (auto r = search(root)) return *r;

    const LineState dual_root{detail::serre_dual_weight(lambda), N, -1};
    if (!parent.count(dual_root)) {
        Step st;
        st.kind = StepKind::SerreDuality;
        st.from = root;
        st.to = dual_root;
        parent.emplace(dual_root, std::make_pair(1, st));
        if (auto r = search(dual_root)) return *r;
    }

    // Bounded: collect the vanishing witnesses with their paths
    std::vector<Step> steps;
    std::set<LineState> emitted{root};
    for (const auto& v : vanishing_steps) {
        for (const auto& st : path_to(v.from)) {
            if (emitted.insert(st.to).second) steps.push_back(st);
        }
        steps.push_back(v);
    }
    CohInfo info;
    info.kind = CohInfo::Kind::Bounded;
    info.euler = chi;
    for (int d = 0; d <= N; ++d)
        if (!excluded.count(d)) info.support.insert(d);
    if (info.support.size() <= 1) {
        Step st;
        st.kind = StepKind::EulerPromotion;
        st.degree = info.support.empty() ? -1 : *info.support.begin();
        steps.push_back(st);
        if (info.support.empty() || chi == 0) {
            if (chi != 0) throw std::logic_error("empty support with nonzero Euler characteristic");
            info = CohInfo::acyclic();
        } else {
            const int d = *info.support.begin();
            const BigInt dim = (d % 2 == 0) ? chi : BigInt(-chi);
            if (dim < 0) throw std::logic_error("negative dimension from Euler promotion");
            info = CohInfo::single(d, dim);
        }
    }
    cert.steps = std::move(steps);
    return {info, cert};
}

/// Certified line-bundle cohomology in characteristic p, memoized on (n, p, lambda).
inline std::pair<CohInfo, Certificate> coh_line_charp(const Weight& lambda, int64_t p)
{
    if (p < 2) throw DomainError("characteristic must be at least 2");
    auto& memo = detail::LineMemo::instance();
    const auto key = std::make_tuple(lambda.rank_n(), p, lambda);
    {
        std::lock_guard lock(memo.mu);
        auto it = memo.table.find(key);
        if (it != memo.table.end()) return it->second;
    }
    auto r = coh_line_charp_uncached(lambda, p);
    std::lock_guard lock(memo.mu);
    memo.table.emplace(key, r);
    return r;
}

/// Re-executes a line-bundle certificate from its root weight, checking every
/// hypothesis, and rebuilds the CohInfo.
inline CohInfo replay_line(const Certificate& cert)
{
    const Weight& lambda = cert.root;
    const int n = lambda.rank_n();
    const int N = n * (n - 1) / 2;
    const int64_t p = cert.p;
    std::set<LineState> reached{LineState{lambda, 0, 1}};
    std::set<int> excluded;
    auto bad = [](const std::string& why) { return std::logic_error("certificate replay failed: " + why); };
    for (const auto& st : cert.steps) {
        if (st.kind != StepKind::EulerPromotion && !reached.count(st.from)) throw bad("unreached state");
        switch (st.kind) {
        case StepKind::AndersenUp:
        case StepKind::AndersenDown: {
            const int64_t c = st.from.mu[st.alpha - 1];
            const bool ok = st.kind == StepKind::AndersenDown
                                ? (c + 1 < 0 && (c >= -p || detail::is_power_form(c, p)))
                                : (c + 1 < 0 && c + 1 >= -p);
            if (!ok) throw bad("reflection hypothesis");
            LineState t{simple_dot(st.alpha, st.from.mu), st.from.shift - 1, st.from.sign};
            if (!(t == st.to)) throw bad("reflection target");
            reached.insert(t);
            break;
        }
        case StepKind::SerreDuality: {
            LineState t{detail::serre_dual_weight(st.from.mu), N - st.from.shift, -st.from.sign};
            if (!(t == st.to)) throw bad("duality target");
            reached.insert(t);
            break;
        }
        case StepKind::KempfVanishing: {
            if (!st.from.mu.is_dominant()) throw bad("Kempf on non-dominant weight");
            const int d = detail::root_degree(st.from, 0);
            Weight label = st.from.sign > 0 ? st.from.mu : st.from.mu.reversed();
            return CohInfo::single(d, weyl_dim(st.from.mu), label);
        }
        case StepKind::SimpleWallAcyclic:
            if (st.from.mu[st.alpha - 1] != -1) throw bad("not on a wall");
            return CohInfo::acyclic();
        case StepKind::TopBottomVanishing: {
            int d = -1;
            if (!st.from.mu.is_dominant() && detail::root_degree(st.from, 0) == st.degree) d = st.degree;
            if (!detail::serre_dual_weight(st.from.mu).is_dominant() &&
                detail::root_degree(st.from, N) == st.degree)
                d = st.degree;
            if (d < 0) throw bad("vanishing hypothesis");
            excluded.insert(d);
            break;
        }
        default:
            break;
        }
    }
    CohInfo info;
    info.kind = CohInfo::Kind::Bounded;
    info.euler = euler_char(lambda);
    for (int d = 0; d <= N; ++d)
        if (!excluded.count(d)) info.support.insert(d);
    if (info.support.size() <= 1) {
        if (info.support.empty() || info.euler == 0) return CohInfo::acyclic();
        const int d = *info.support.begin();
        return CohInfo::single(d, (d % 2 == 0) ? info.euler : BigInt(-info.euler));
    }
    return info;
}

}  // namespace flagfrob

#endif  // FLAGFROB_COH_HPP_
