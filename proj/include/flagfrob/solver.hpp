#ifndef FLAGFROB_SOLVER_HPP_
#define FLAGFROB_SOLVER_HPP_

// Cohomology of presented bundles by propagating long-exact-sequence
// constraints over a graph of objects until nothing changes.

#include "coh.hpp"
#include "sheaves.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace flagfrob {

class InconsistentCohomology : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SolveNode {
    std::string name;
    KClass kclass;  ///< before any Frobenius pullback
    BigInt chi;     ///< of the object actually solved for
    bool leaf = false;
    Weight weight;  ///< leaf weight after pullback
};

struct SolveConstraint {
    enum class Kind { SES, Sum, Bound };
    Kind kind = Kind::SES;
    int a = -1, b = -1, c = -1;                 ///< SES 0->a->b->c->0; Bound a <= b; Sum a = (+) parts
    std::vector<std::pair<BigInt, int>> parts;  ///< Sum only
    int presentation = -1;
    std::string label;
};

struct NodeState {
    uint32_t mask = 0;
    std::vector<std::optional<BigInt>> hi;  ///< upper bound per degree, nullopt = unbounded
    friend bool operator==(const NodeState&, const NodeState&) = default;
};

struct SolveTrace {
    int n = 0;
    int N = 0;
    int64_t p = 0;
    bool frobenius = false;
    int root = 0;
    std::vector<SolveNode> nodes;
    std::vector<SolveConstraint> constraints;
    std::vector<std::string> presentations;
    std::map<int, CohInfo> leaf_info;
    std::map<int, Certificate> leaf_certs;
};

namespace detail {

inline uint32_t full_mask(int N) { return (N >= 31) ? 0xffffffffu : ((1u << (N + 1)) - 1u); }

inline std::optional<BigInt> hi_at(const NodeState& s, int k, int N)
{
    if (k < 0 || k > N || !(s.mask >> k & 1u)) return BigInt(0);
    return s.hi[k];
}

inline std::optional<BigInt> add_opt(const std::optional<BigInt>& a, const std::optional<BigInt>& b)
{
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

inline NodeState state_from_info(const CohInfo& info, int N)
{
    NodeState s;
    s.hi.assign(N + 1, std::nullopt);
    switch (info.kind) {
    case CohInfo::Kind::Acyclic:
        break;
    case CohInfo::Kind::Determined:
        for (const auto& [d, e] : info.degrees) {
            s.mask |= 1u << d;
            s.hi[d] = e.dim;
        }
        break;
    case CohInfo::Kind::Bounded:
        for (int d : info.support) s.mask |= 1u << d;
        for (const auto& [d, v] : info.upper) s.hi[d] = v;
        break;
    }
    return s;
}

/// Clears degrees with a zero bound and pins a lone degree by the Euler
/// characteristic.
inline void normalize(NodeState& s, const BigInt& chi, int N, const std::string& who)
{
    for (int k = 0; k <= N; ++k) {
        if (!(s.mask >> k & 1u)) {
            s.hi[k] = std::nullopt;
            continue;
        }
        if (s.hi[k] && *s.hi[k] == 0) {
            s.mask &= ~(1u << k);
            s.hi[k] = std::nullopt;
        }
    }
    if (s.mask == 0) {
        if (chi != 0) throw InconsistentCohomology(who + ": empty support with nonzero Euler characteristic");
        return;
    }
    if ((s.mask & (s.mask - 1)) == 0) {
        int d = 0;
        while (!(s.mask >> d & 1u)) ++d;
        const BigInt dim = (d % 2 == 0) ? chi : BigInt(-chi);
        if (dim < 0) throw InconsistentCohomology(who + ": Euler characteristic has the wrong sign for its support");
        if (s.hi[d] && *s.hi[d] < dim) throw InconsistentCohomology(who + ": bound below forced dimension");
        s.hi[d] = dim;
        if (dim == 0) {
            s.mask = 0;
            s.hi[d] = std::nullopt;
        }
    }
}

/// Bound on `target` implied by constraint c and the current states.
inline std::optional<NodeState> rule_bound(const SolveConstraint& c, int target, const std::vector<NodeState>& st, int N)
{
    NodeState out;
    out.hi.assign(N + 1, std::nullopt);
    const uint32_t full = full_mask(N);
    auto h = [&](int node, int k) { return hi_at(st[node], k, N); };
    switch (c.kind) {
    case SolveConstraint::Kind::SES: {
        const int A = c.a, B = c.b, C = c.c;
        if (target == B) {
            out.mask = st[A].mask | st[C].mask;
            for (int k = 0; k <= N; ++k) out.hi[k] = add_opt(h(A, k), h(C, k));
        } else if (target == A) {
            out.mask = (st[B].mask | (st[C].mask << 1)) & full;
            for (int k = 0; k <= N; ++k) out.hi[k] = add_opt(h(B, k), h(C, k - 1));
        } else if (target == C) {
            out.mask = st[B].mask | (st[A].mask >> 1);
            for (int k = 0; k <= N; ++k) out.hi[k] = add_opt(h(B, k), h(A, k + 1));
        } else {
            return std::nullopt;
        }
        return out;
    }
    case SolveConstraint::Kind::Sum: {
        if (target == c.a) {
            out.mask = 0;
            for (int k = 0; k <= N; ++k) out.hi[k] = BigInt(0);
            for (const auto& [d, x] : c.parts) {
                out.mask |= st[x].mask;
                for (int k = 0; k <= N; ++k) {
                    auto v = h(x, k);
                    out.hi[k] = v && out.hi[k] ? std::optional<BigInt>(*out.hi[k] + d * *v) : std::nullopt;
                }
            }
            return out;
        }
        for (const auto& [d, x] : c.parts) {
            if (x != target) continue;
            out.mask = st[c.a].mask;
            for (int k = 0; k <= N; ++k) {
                auto v = h(c.a, k);
                out.hi[k] = v ? std::optional<BigInt>(*v / d) : std::nullopt;
            }
            return out;
        }
        return std::nullopt;
    }
    case SolveConstraint::Kind::Bound: {
        if (target != c.a) return std::nullopt;
        out.mask = st[c.b].mask;
        for (int k = 0; k <= N; ++k) out.hi[k] = h(c.b, k);
        return out;
    }
    }
    return std::nullopt;
}

inline NodeState tighten(const NodeState& old, const NodeState& bound, int N)
{
    NodeState s = old;
    s.mask &= bound.mask;
    for (int k = 0; k <= N; ++k) {
        if (bound.hi[k] && (!s.hi[k] || *bound.hi[k] < *s.hi[k])) s.hi[k] = bound.hi[k];
    }
    return s;
}

inline std::vector<int> constraint_nodes(const SolveConstraint& c)
{
    switch (c.kind) {
    case SolveConstraint::Kind::SES: return {c.a, c.b, c.c};
    case SolveConstraint::Kind::Bound: return {c.a};
    case SolveConstraint::Kind::Sum: {
        std::vector<int> v{c.a};
        for (const auto& [d, x] : c.parts) v.push_back(x);
        return v;
    }
    }
    return {};
}

inline CohInfo info_from_state(const NodeState& s, const BigInt& chi, int N)
{
    if (s.mask == 0) return CohInfo::acyclic();
    if ((s.mask & (s.mask - 1)) == 0) {
        int d = 0;
        while (!(s.mask >> d & 1u)) ++d;
        return CohInfo::single(d, *s.hi[d]);
    }
    CohInfo info;
    info.kind = CohInfo::Kind::Bounded;
    info.euler = chi;
    for (int k = 0; k <= N; ++k)
        if (s.mask >> k & 1u) {
            info.support.insert(k);
            if (s.hi[k]) info.upper.emplace(k, *s.hi[k]);
        }
    return info;
}

class GraphBuilder {
    const Catalog& cat_;
    std::shared_ptr<SolveTrace> tr_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, BundleRef>> pending_;
    std::size_t max_nodes_;

public:
    GraphBuilder(const Catalog& cat, int64_t p, bool frob, std::size_t max_nodes = 50000)
        : cat_(cat), tr_(std::make_shared<SolveTrace>()), max_nodes_(max_nodes)
    {
        tr_->n = cat.n();
        tr_->N = cat.n() * (cat.n() - 1) / 2;
        tr_->p = p;
        tr_->frobenius = frob;
    }

    std::shared_ptr<SolveTrace> build(const BundleRef& root)
    {
        tr_->root = node_for(root);
        while (!pending_.empty()) {
            auto [id, ref] = pending_.back();
            pending_.pop_back();
            expand(id, ref);
        }
        return tr_;
    }

private:
    BigInt chi_of(const KClass& k) const
    {
        return euler_char(tr_->frobenius ? k.frobenius_twist(tr_->p) : k);
    }

    int new_node(const std::string& name, const KClass& k)
    {
        if (tr_->nodes.size() >= max_nodes_) throw std::runtime_error("solver graph exceeds node limit");
        SolveNode nd;
        nd.name = name;
        nd.kclass = k;
        nd.chi = chi_of(k);
        tr_->nodes.push_back(std::move(nd));
        const int id = static_cast<int>(tr_->nodes.size()) - 1;
        index_.emplace(name, id);
        return id;
    }

    int node_for(const BundleRef& r)
    {
        const std::string name = r.name();
        if (auto it = index_.find(name); it != index_.end()) return it->second;
        const int id = new_node(name, cat_.kclass(r));
        if (r.is_line()) {
            auto& nd = tr_->nodes[id];
            nd.leaf = true;
            nd.weight = tr_->frobenius ? tr_->p * r.twist : r.twist;
            auto [info, cert] = coh_line_charp(nd.weight, tr_->p);
            tr_->leaf_info.emplace(id, info);
            tr_->leaf_certs.emplace(id, cert);
        } else {
            pending_.emplace_back(id, r);
        }
        return id;
    }

    int sum_node(const std::vector<Term>& ts)
    {
        if (ts.size() == 1 && ts[0].mult() == 1) return node_for(ts[0].bundle);
        std::vector<std::pair<BigInt, int>> parts;
        std::string key = "[";
        KClass k(cat_.n());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const BigInt m = ts[i].mult();
            if (m == 0) continue;
            const int x = node_for(ts[i].bundle);
            parts.emplace_back(m, x);
            key += (i ? " + " : "") + (m == 1 ? std::string() : m.str() + "*") + tr_->nodes[x].name;
            k += tr_->nodes[x].kclass * m;
        }
        key += "]";
        if (auto it = index_.find(key); it != index_.end()) return it->second;
        const int id = new_node(key, k);
        SolveConstraint c;
        c.kind = SolveConstraint::Kind::Sum;
        c.a = id;
        c.parts = std::move(parts);
        c.label = "direct sum " + key;
        tr_->constraints.push_back(std::move(c));
        return id;
    }

    int aux_node(const std::string& name, const KClass& k) { return new_node(name, k); }

    void add_ses(int a, int b, int c, int pres, const std::string& label)
    {
        SolveConstraint s;
        s.kind = SolveConstraint::Kind::SES;
        s.a = a;
        s.b = b;
        s.c = c;
        s.presentation = pres;
        s.label = label;
        tr_->constraints.push_back(std::move(s));
    }

    void add_bound(int a, int b, int pres, const std::string& label)
    {
        SolveConstraint s;
        s.kind = SolveConstraint::Kind::Bound;
        s.a = a;
        s.b = b;
        s.presentation = pres;
        s.label = label;
        tr_->constraints.push_back(std::move(s));
    }

    void expand(int self, const BundleRef& r)
    {
        const BundleExpr e = cat_.expr(r);
        const std::string me = tr_->nodes[self].name;
        for (std::size_t pi = 0; pi < e.presentations.size(); ++pi) {
            const auto& pr = e.presentations[pi];
            const int pid = static_cast<int>(tr_->presentations.size());
            const std::string plabel = me + " : " + pres_kind_name(pr.kind) + " (" + pr.anchor + ")";
            tr_->presentations.push_back(plabel);
            switch (pr.kind) {
            case PresKind::Iso: {
                const int x = sum_node(pr.terms.at(0));
                add_bound(self, x, pid, plabel);
                add_bound(x, self, pid, plabel);
                break;
            }
            case PresKind::Filtration: {
                std::vector<int> pieces;
                for (const auto& t : pr.terms) pieces.push_back(sum_node(t));
                if (pieces.size() == 1) {
                    add_bound(self, pieces[0], pid, plabel);
                    add_bound(pieces[0], self, pid, plabel);
                    break;
                }
                int cur = pieces[0];
                KClass acc = tr_->nodes[cur].kclass;
                for (std::size_t j = 1; j < pieces.size(); ++j) {
                    acc += tr_->nodes[pieces[j]].kclass;
                    const int next = (j + 1 == pieces.size())
                                         ? self
                                         : aux_node(me + "#" + std::to_string(pi) + ".F" + std::to_string(j), acc);
                    add_ses(cur, next, pieces[j], pid, plabel);
                    cur = next;
                }
                break;
            }
            case PresKind::Exact: {
                std::vector<int> t;
                for (std::size_t j = 0; j < pr.terms.size(); ++j)
                    t.push_back(static_cast<int>(j) == pr.self ? self : sum_node(pr.terms[j]));
                const std::size_t m = t.size() - 1;  // 0 -> t0 -> ... -> tm -> 0
                if (m == 1) {
                    add_bound(t[0], t[1], pid, plabel);
                    add_bound(t[1], t[0], pid, plabel);
                    break;
                }
                int z = t[0];
                KClass zk = tr_->nodes[z].kclass;
                for (std::size_t j = 1; j + 1 < m; ++j) {
                    // 0 -> z -> t_j -> z' -> 0
                    KClass nk = tr_->nodes[t[j]].kclass - zk;
                    const int z2 = aux_node(me + "#" + std::to_string(pi) + ".Z" + std::to_string(j + 1), nk);
                    add_ses(z, t[j], z2, pid, plabel);
                    z = z2;
                    zk = nk;
                }
                add_ses(z, t[m - 1], t[m], pid, plabel);
                break;
            }
            }
        }
        if (e.character) {
            const auto& ch = *e.character;
            const bool trivial = ch.size() == 1 && ch.terms().begin()->second == 1;
            if (!trivial) {
                std::vector<Term> ts;
                for (const auto& [w, m] : ch.terms()) ts.push_back(Term{KClass::trivial(cat_.n(), m), BundleRef::line(w)});
                const int pid = static_cast<int>(tr_->presentations.size());
                const std::string plabel = me + " : weight filtration of the B-module";
                tr_->presentations.push_back(plabel);
                const int s = sum_node(ts);
                add_bound(self, s, pid, plabel);
            }
        }
    }
};

inline std::vector<NodeState> initial_states(const SolveTrace& tr, const std::map<int, CohInfo>& leaf_info)
{
    std::vector<NodeState> st(tr.nodes.size());
    for (std::size_t i = 0; i < tr.nodes.size(); ++i) {
        if (tr.nodes[i].leaf) {
            st[i] = state_from_info(leaf_info.at(static_cast<int>(i)), tr.N);
        } else {
            st[i].mask = full_mask(tr.N);
            st[i].hi.assign(tr.N + 1, std::nullopt);
        }
        normalize(st[i], tr.nodes[i].chi, tr.N, tr.nodes[i].name);
    }
    return st;
}

}  // namespace detail

/// Cohomology of a presented bundle (optionally Frobenius pulled back).
inline std::pair<CohInfo, Certificate> solve_presented(const Catalog& cat, const BundleRef& obj, int64_t p,
                                                       bool frobenius)
{
    if (p < 2) throw DomainError("characteristic must be at least 2");
    if (obj.is_line()) return coh_line_charp(frobenius ? p * obj.twist : obj.twist, p);

    auto tr = detail::GraphBuilder(cat, p, frobenius).build(obj);
    const int N = tr->N;
    auto st = detail::initial_states(*tr, tr->leaf_info);

    // node -> constraints touching it, for a worklist sweep
    std::vector<std::vector<int>> touching(tr->nodes.size());
    for (std::size_t ci = 0; ci < tr->constraints.size(); ++ci)
        for (int x : detail::constraint_nodes(tr->constraints[ci])) touching[x].push_back(static_cast<int>(ci));

    Certificate cert;
    cert.n = cat.n();
    cert.p = p;
    cert.subject = (frobenius ? "F*(" + obj.name() + ")" : obj.name()) + " on SL_" + std::to_string(cat.n()) +
                   "/B, p = " + std::to_string(p);
    std::vector<Step> steps;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < tr->constraints.size(); ++ci) {
            const auto& c = tr->constraints[ci];
            for (int target : detail::constraint_nodes(c)) {
                if (tr->nodes[target].leaf && st[target].mask == 0) continue;
                auto bound = detail::rule_bound(c, target, st, N);
                if (!bound) continue;
                NodeState nxt = detail::tighten(st[target], *bound, N);
                detail::normalize(nxt, tr->nodes[target].chi, N, tr->nodes[target].name);
                if (nxt == st[target]) continue;
                if (tr->nodes[target].leaf && !tr->leaf_info.at(target).is_bounded()) {
                    if (nxt.mask != st[target].mask)
                        throw InconsistentCohomology("constraint " + c.label + " contradicts line bundle " +
                                                     tr->nodes[target].name);
                }
                st[target] = std::move(nxt);
                Step s;
                s.kind = StepKind::LESStep;
                s.constraint = static_cast<int>(ci);
                s.node = target;
                s.presentation = c.presentation;
                s.mask = st[target].mask;
                for (int k = 0; k <= N; ++k)
                    if (st[target].hi[k]) s.bounds.emplace(k, *st[target].hi[k]);
                steps.push_back(std::move(s));
                changed = true;
            }
        }
    }

    std::set<int> root_pres;
    for (const auto& s : steps)
        if (s.node == tr->root && s.presentation >= 0) root_pres.insert(s.presentation);
    if (root_pres.size() >= 2) {
        Step s;
        s.kind = StepKind::MultiPresentationIntersect;
        s.node = tr->root;
        std::ostringstream os;
        os << root_pres.size() << " presentations intersected";
        s.note = os.str();
        steps.push_back(std::move(s));
    }
    cert.steps = std::move(steps);
    CohInfo info = detail::info_from_state(st[tr->root], tr->nodes[tr->root].chi, N);
    cert.trace = tr;
    return {info, cert};
}

inline std::pair<CohInfo, Certificate> solve_presented(const Catalog& cat, const std::string& name, int64_t p,
                                                       bool frobenius)
{
    return solve_presented(cat, cat.ref(name), p, frobenius);
}

/// Re-executes a certificate (line or presented) and rebuilds its CohInfo.
inline CohInfo replay(const Certificate& cert)
{
    if (!cert.trace) return replay_line(cert);
    const SolveTrace& tr = *cert.trace;
    const int N = tr.N;
    std::map<int, CohInfo> leaves;
    for (const auto& [id, lc] : tr.leaf_certs) {
        CohInfo r = replay_line(lc);
        if (!(r == tr.leaf_info.at(id))) throw std::logic_error("leaf certificate replay mismatch at " + tr.nodes[id].name);
        leaves.emplace(id, r);
    }
    auto st = detail::initial_states(tr, leaves);
    for (const auto& s : cert.steps) {
        if (s.kind != StepKind::LESStep) continue;
        const auto& c = tr.constraints.at(s.constraint);
        auto bound = detail::rule_bound(c, s.node, st, N);
        if (!bound) throw std::logic_error("replay: constraint does not bound node");
        NodeState nxt = detail::tighten(st[s.node], *bound, N);
        detail::normalize(nxt, tr.nodes[s.node].chi, N, tr.nodes[s.node].name);
        NodeState claimed;
        claimed.mask = s.mask;
        claimed.hi.assign(N + 1, std::nullopt);
        for (const auto& [k, v] : s.bounds) claimed.hi[k] = v;
        if (!(nxt == claimed)) throw std::logic_error("replay: step " + c.label + " does not reproduce");
        st[s.node] = std::move(nxt);
    }
    return detail::info_from_state(st[tr.root], tr.nodes[tr.root].chi, N);
}

/// Human-readable summary of a presented-bundle certificate: graph size and
/// the steps that touched the object itself.
inline std::string render_certificate(const Certificate& cert)
{
    if (!cert.trace) return cert.render();
    const SolveTrace& tr = *cert.trace;
    std::ostringstream os;
    os << cert.subject << '\n';
    os << "  graph: " << tr.nodes.size() << " objects, " << tr.constraints.size() << " constraints, "
       << tr.leaf_certs.size() << " line bundles, " << cert.steps.size() << " propagation steps\n";
    int i = 0;
    for (const auto& s : cert.steps) {
        if (s.node != tr.root) continue;
        os << "  " << ++i << ". " << step_name(s.kind);
        if (s.kind == StepKind::LESStep) {
            os << " via " << tr.constraints[s.constraint].label << " -> support {";
            bool first = true;
            for (int k = 0; k <= tr.N; ++k)
                if (s.mask >> k & 1u) {
                    os << (first ? "" : ",") << k;
                    first = false;
                }
            os << "}";
        } else if (!s.note.empty()) {
            os << " (" << s.note << ")";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace flagfrob

#endif  // FLAGFROB_SOLVER_HPP_
