#ifndef FLAGFROB_JSON_IO_HPP_
#define FLAGFROB_JSON_IO_HPP_

// JSON views of reports. Every number is a decimal string; keys are sorted
// (nlohmann::json uses std::map), so dump() is canonical.

#include "frobdecomp.hpp"

#include "json.hpp"

#include <string>

namespace flagfrob::io {

using nlohmann::json;

inline std::string num(const BigInt& v) { return v.str(); }
inline std::string num(int64_t v) { return std::to_string(v); }

inline json to_json(const Weight& w)
{
    json a = json::array();
    for (auto x : w.coeffs()) a.push_back(num(x));
    return a;
}

inline json to_json(const KClass& k)
{
    json a = json::array();
    for (const auto& [w, m] : k.terms()) a.push_back(json{{"weight", to_json(w)}, {"coeff", num(m)}});
    return a;
}

inline json to_json(const CohInfo& c)
{
    json j;
    switch (c.kind) {
    case CohInfo::Kind::Acyclic: j["kind"] = "acyclic"; break;
    case CohInfo::Kind::Determined: j["kind"] = "determined"; break;
    case CohInfo::Kind::Bounded: j["kind"] = "bounded"; break;
    }
    j["euler"] = num(c.euler);
    json deg = json::array();
    for (const auto& [d, e] : c.degrees) {
        json x{{"degree", num(d)}, {"dim", num(e.dim)}};
        x["label"] = e.label ? to_json(*e.label) : json(nullptr);
        deg.push_back(std::move(x));
    }
    j["degrees"] = std::move(deg);
    if (c.is_bounded()) {
        json sup = json::array();
        for (int d : c.support) sup.push_back(num(d));
        j["support"] = std::move(sup);
        json up = json::object();
        for (const auto& [d, v] : c.upper) up[num(d)] = num(v);
        j["upper"] = std::move(up);
    }
    return j;
}

inline json to_json(const Certificate& cert)
{
    json j;
    j["subject"] = cert.subject;
    j["p"] = num(cert.p);
    json steps = json::array();
    const SolveTrace* tr = cert.trace.get();
    for (const auto& s : cert.steps) {
        if (tr && s.node != tr->root) continue;
        json x{{"step", step_name(s.kind)}};
        switch (s.kind) {
        case StepKind::AndersenUp:
        case StepKind::AndersenDown:
            x["alpha"] = num(s.alpha);
            x["from"] = to_json(s.from.mu);
            x["to"] = to_json(s.to.mu);
            break;
        case StepKind::SerreDuality:
            x["from"] = to_json(s.from.mu);
            x["to"] = to_json(s.to.mu);
            break;
        case StepKind::SimpleWallAcyclic:
            x["alpha"] = num(s.alpha);
            x["at"] = to_json(s.from.mu);
            break;
        case StepKind::KempfVanishing:
            x["at"] = to_json(s.from.mu);
            x["degree"] = num(s.degree);
            break;
        case StepKind::EulerPromotion:
        case StepKind::TopBottomVanishing: x["degree"] = num(s.degree); break;
        case StepKind::LESStep: {
            if (tr) x["via"] = tr->constraints[s.constraint].label;
            json sup = json::array();
            for (int k = 0; k < 32; ++k)
                if (s.mask >> k & 1u) sup.push_back(num(k));
            x["support"] = std::move(sup);
            break;
        }
        case StepKind::MultiPresentationIntersect: break;
        }
        if (!s.note.empty()) x["note"] = s.note;
        steps.push_back(std::move(x));
    }
    j["steps"] = std::move(steps);
    if (tr) {
        j["graph_objects"] = num(static_cast<int64_t>(tr->nodes.size()));
        j["graph_constraints"] = num(static_cast<int64_t>(tr->constraints.size()));
        j["line_bundles"] = num(static_cast<int64_t>(tr->leaf_certs.size()));
    }
    return j;
}

inline json to_json(const DecompositionReport& r, bool explain = false)
{
    json j;
    j["variety"] = "x" + std::to_string(r.n);
    j["p"] = num(r.p);
    j["conforming"] = r.conforming;
    json ss = json::array();
    for (const auto& s : r.summands) {
        json x;
        x["name"] = s.name;
        x["object"] = s.object;
        x["block"] = s.block;
        x["rank"] = num(s.rank);
        x["degree"] = num(s.degree);
        x["multiplicity"] = num(s.multiplicity);
        x["label"] = s.label ? to_json(*s.label) : json(nullptr);
        x["certificate"] = s.certificate;
        x["catalog_match"] = s.catalog_match;
        if (explain) x["proof"] = to_json(s.cert);
        ss.push_back(std::move(x));
    }
    j["summands"] = std::move(ss);
    j["rank_identity"] = json{{"lhs", num(r.rank_identity.lhs)},
                              {"rhs", num(r.rank_identity.rhs)},
                              {"pass", r.rank_identity.pass}};
    j["unresolved"] = r.unresolved;
    j["verdict"] = r.verdict();
    return j;
}

inline json to_json(const ConjectureReport& r)
{
    json j;
    j["n"] = num(r.n);
    j["p"] = num(r.p);
    json blocks = json::array();
    for (const auto& [label, size] : r.blocks) blocks.push_back(json{{"block", label}, {"size", num(static_cast<int64_t>(size))}});
    j["blocks"] = std::move(blocks);
    j["object_count"] = num(static_cast<int64_t>(r.object_count));
    j["expected_count"] = num(static_cast<int64_t>(r.expected_count));
    j["count_ok"] = r.count_ok;
    j["gram_unitriangular"] = r.gram_unitriangular;
    j["gram_unimodular"] = r.gram_unimodular;
    json objs = json::array();
    for (const auto& o : r.objects)
        objs.push_back(json{{"name", o.name},
                            {"block", o.block},
                            {"expected_degree", num(o.expected_degree)},
                            {"catalog_match", o.catalog_match},
                            {"cohomology", to_json(o.coh)}});
    j["objects"] = std::move(objs);
    j["concentrated"] = num(static_cast<int64_t>(r.concentrated));
    j["conditional_identity"] = json{{"lhs", num(r.conditional_identity.lhs)},
                                     {"rhs", num(r.conditional_identity.rhs)},
                                     {"pass", r.conditional_identity.pass},
                                     {"conditional", r.identity_conditional}};
    j["flags"] = r.flags;
    j["decomposition"] = to_json(r.decomposition);
    return j;
}

inline json to_json(const SemiorthogonalityReport& r, bool explain = false)
{
    json j;
    j["n"] = num(r.n);
    j["p"] = num(r.p);
    j["conforming"] = r.conforming;
    json pairs = json::array();
    for (const auto& pc : r.pairs) {
        json x{{"from", pc.from_name},
               {"to", pc.to_name},
               {"within_block", pc.within_block},
               {"euler", num(pc.euler)},
               {"status", pair_status_name(pc.status)}};
        x["cohomology"] = pc.coh ? to_json(*pc.coh) : json(nullptr);
        if (!pc.note.empty()) x["note"] = pc.note;
        if (explain && pc.cert) x["proof"] = to_json(*pc.cert);
        pairs.push_back(std::move(x));
    }
    j["pairs"] = std::move(pairs);
    j["counts"] = json{{"verified_zero", num(static_cast<int64_t>(r.count(PairStatus::VerifiedZero)))},
                       {"euler_zero_unknown", num(static_cast<int64_t>(r.count(PairStatus::EulerZeroUnknown)))},
                       {"violation", num(static_cast<int64_t>(r.count(PairStatus::Violation)))}};
    return j;
}

inline json to_json(const Presentation& pr)
{
    json terms = json::array();
    for (std::size_t t = 0; t < pr.terms.size(); ++t) {
        json slot = json::array();
        if (pr.kind == PresKind::Exact && static_cast<int>(t) == pr.self) {
            terms.push_back("self");
            continue;
        }
        for (const auto& term : pr.terms[t])
            slot.push_back(json{{"bundle", term.bundle.name()}, {"multiplicity", num(term.mult())}});
        terms.push_back(std::move(slot));
    }
    return json{{"kind", pres_kind_name(pr.kind)}, {"anchor", pr.anchor}, {"terms", std::move(terms)}};
}

inline json to_json(const Catalog& cat)
{
    json j;
    j["n"] = num(cat.n());
    json bundles = json::array();
    const auto one = [&](const BundleExpr& e, const std::string& display) {
        json pres = json::array();
        for (const auto& pr : e.presentations) pres.push_back(to_json(pr));
        return json{{"name", e.name},
                    {"display", display},
                    {"rank", num(e.rank())},
                    {"kclass", to_json(e.kclass)},
                    {"anchor", e.anchor},
                    {"nonsplit", e.nonsplit},
                    {"presentations", std::move(pres)}};
    };
    for (const auto& name : cat.base_names()) bundles.push_back(one(cat.expr(name), cat.base(name).display));
    for (const auto& name : cat.alias_names()) bundles.push_back(one(cat.expr(name), cat.ref(name).name()));
    j["bundles"] = std::move(bundles);
    return j;
}

}  // namespace flagfrob::io

#endif  // FLAGFROB_JSON_IO_HPP_
