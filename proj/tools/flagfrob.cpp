// flagfrob: command-line front end for the cohomology engine, the bundle
// catalog and the decomposition of F_* O on X_4, X_5.

#include "flagfrob/acceptance.hpp"
#include "flagfrob/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace flagfrob;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 2;
constexpr int kIncomplete = 3;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "text";
    bool explain = false;
    int threads = default_threads();
    int n = 4;
    int64_t p = 5;
    std::string weight;
    std::string variety = "x4";
};

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string label_str(const std::optional<Weight>& w) { return w ? w->str() : ""; }

Weight parse_weight(const std::string& s, int n)
{
    std::vector<int64_t> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size() && tok.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad weight entry '" + tok + "'");
        }
    }
    if (static_cast<int>(v.size()) != n - 1)
        throw UsageError("weight needs " + std::to_string(n - 1) + " entries for n = " + std::to_string(n));
    return Weight(std::move(v));
}

void need_prime(int64_t p)
{
    if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
}

void need_n(int n, int lo)
{
    if (n < lo) throw UsageError("n must be at least " + std::to_string(lo));
}

Variety need_variety(const std::string& s)
{
    auto v = parse_variety(s);
    if (!v) throw UsageError("variety must be x4 or x5");
    return *v;
}

//-----------------------------------------------------------------------------

int cmd_coh(const Config& c)
{
    need_n(c.n, 2);
    need_prime(c.p);
    const Weight w = parse_weight(c.weight, c.n);
    auto [info, cert] = coh_line_charp(w, c.p);
    if (c.format == "json") {
        json j{{"n", io::num(c.n)}, {"p", io::num(c.p)}, {"weight", io::to_json(w)}, {"cohomology", io::to_json(info)}};
        if (c.explain) j["certificate"] = io::to_json(cert);
        emit_json(j);
    } else if (c.format == "csv") {
        std::cout << "degree,dim,label\n";
        for (const auto& [d, e] : info.degrees) std::cout << d << ',' << e.dim << ',' << csv_field(label_str(e.label)) << '\n';
    } else {
        std::cout << "L" << w.str() << " on SL_" << c.n << "/B, p = " << c.p << ": " << info.str() << '\n';
        if (c.explain) std::cout << cert.render();
    }
    return info.is_bounded() ? kIncomplete : kOk;
}

int cmd_euler(const Config& c)
{
    need_n(c.n, 2);
    const Weight w = parse_weight(c.weight, c.n);
    const BigInt chi = euler_char(w);
    if (c.format == "json") emit_json(json{{"n", io::num(c.n)}, {"weight", io::to_json(w)}, {"euler", io::num(chi)}});
    else if (c.format == "csv") std::cout << "euler\n" << chi << '\n';
    else std::cout << chi << '\n';
    return kOk;
}

int cmd_catalog(const Config& c)
{
    need_n(c.n, 4);
    const auto cat = shared_catalog(c.n);
    if (c.format == "json") {
        emit_json(io::to_json(*cat));
        return kOk;
    }
    if (c.format == "csv") std::cout << "name,rank,presentations\n";
    const auto row = [&](const BundleExpr& e) {
        if (c.format == "csv")
            std::cout << csv_field(e.name) << ',' << e.rank() << ',' << e.presentations.size() << '\n';
        else {
            std::cout << e.name << "  rank " << e.rank() << "  [" << e.anchor << "]\n";
            for (const auto& pr : e.presentations) std::cout << "    " << pres_kind_name(pr.kind) << ": " << pr.anchor << '\n';
        }
    };
    for (const auto& name : cat->base_names()) row(cat->expr(name));
    for (const auto& name : cat->alias_names()) row(cat->expr(name));
    return kOk;
}

int cmd_verify(const Config& c)
{
    need_prime(c.p);
    const Variety v = need_variety(c.variety);
    const auto coll = build_collection(v);
    const auto rep = verify_semiorthogonality(coll, c.p, c.threads);
    if (c.format == "json") emit_json(io::to_json(rep, c.explain));
    else if (c.format == "csv") {
        std::cout << "from,to,within_block,euler,status\n";
        for (const auto& pc : rep.pairs)
            std::cout << csv_field(pc.from_name) << ',' << csv_field(pc.to_name) << ',' << pc.within_block << ','
                      << pc.euler << ',' << pair_status_name(pc.status) << '\n';
    } else {
        // row = source of Hom, column = target; '.' zero, '?' unknown, 'X' violation
        const auto objs = coll.flat();
        std::vector<std::string> cell(objs.size() * objs.size(), " ");
        for (std::size_t i = 0; i < objs.size(); ++i) cell[i * objs.size() + i] = "=";
        for (const auto& pc : rep.pairs) {
            const char* s = pc.status == PairStatus::VerifiedZero ? "." : pc.status == PairStatus::Violation ? "X" : "?";
            cell[pc.from * objs.size() + pc.to] = s;
        }
        std::cout << "Hom^*(row, column) on " << variety_name(v) << ", p = " << c.p
                  << (rep.conforming ? "" : " (outside p > 2)") << '\n';
        for (std::size_t i = 0; i < objs.size(); ++i) {
            std::cout << (i < 10 ? " " : "") << i << " ";
            for (std::size_t j = 0; j < objs.size(); ++j) std::cout << cell[i * objs.size() + j];
            std::cout << "  " << objs[i]->name << '\n';
        }
        std::cout << "verified-zero " << rep.count(PairStatus::VerifiedZero) << ", euler-zero-unknown "
                  << rep.count(PairStatus::EulerZeroUnknown) << ", violations " << rep.count(PairStatus::Violation)
                  << '\n';
        if (c.explain)
            for (const auto& pc : rep.pairs)
                if (pc.cert) std::cout << render_certificate(*pc.cert);
    }
    return rep.has_violation() ? kFailure : kOk;
}

int decomposition_exit(const DecompositionReport& r)
{
    if (!r.unresolved.empty()) return kIncomplete;
    return r.rank_identity.pass ? kOk : kFailure;
}

void print_decomposition(const DecompositionReport& rep, const Config& c)
{
    if (c.format == "json") {
        emit_json(io::to_json(rep, c.explain));
        return;
    }
    if (c.format == "csv") {
        std::cout << "name,object,block,rank,degree,multiplicity,label,certificate\n";
        for (const auto& s : rep.summands)
            std::cout << csv_field(s.name) << ',' << csv_field(s.object) << ',' << s.block << ',' << s.rank << ','
                      << s.degree << ',' << s.multiplicity << ',' << csv_field(label_str(s.label)) << ','
                      << s.certificate << '\n';
        return;
    }
    std::cout << "F_* O on X_" << rep.n << ", p = " << rep.p << (rep.conforming ? "" : " (outside p > 2)") << '\n';
    for (const auto& s : rep.summands) {
        std::cout << "  " << s.block << "  " << s.name << "  rank " << s.rank << "  x " << s.multiplicity << "  (H^"
                  << s.degree << " of F*" << s.object << ")";
        if (s.label) std::cout << " label " << s.label->str();
        if (!s.catalog_match) std::cout << "  [named bundle has a different class]";
        std::cout << '\n';
        if (c.explain) std::cout << render_certificate(s.cert);
    }
    std::cout << "sum rank * multiplicity = " << rep.rank_identity.lhs << ", p^" << incidence_dim(rep.n) << " = "
              << rep.rank_identity.rhs << " -> " << rep.verdict() << '\n';
    for (const auto& u : rep.unresolved) std::cout << "  unresolved: " << u << '\n';
}

int cmd_decompose(const Config& c)
{
    need_prime(c.p);
    const auto rep = decompose(need_variety(c.variety), c.p, c.threads);
    print_decomposition(rep, c);
    return decomposition_exit(rep);
}

bool concentrated_ok(const ConjectureObject& o)
{
    const auto d = o.coh.concentrated_degree();
    return d && *d == o.expected_degree;
}

int cmd_conjecture(const Config& c)
{
    need_n(c.n, 4);
    need_prime(c.p);
    const auto rep = conjecture_check(c.n, c.p, c.threads);
    if (c.format == "json") emit_json(io::to_json(rep));
    else if (c.format == "csv") {
        std::cout << "name,block,expected_degree,catalog_match,cohomology\n";
        for (const auto& o : rep.objects)
            std::cout << csv_field(o.name) << ',' << o.block << ',' << o.expected_degree << ',' << o.catalog_match << ','
                      << csv_field(o.coh.str()) << '\n';
    } else {
        std::cout << "n = " << rep.n << ", p = " << rep.p << ": " << rep.object_count << " objects (expected "
                  << rep.expected_count << "), Gram unitriangular " << (rep.gram_unitriangular ? "yes" : "no")
                  << ", unimodular " << (rep.gram_unimodular ? "yes" : "no") << '\n';
        for (const auto& [label, size] : rep.blocks) std::cout << "  " << label << ": " << size << '\n';
        for (const auto& o : rep.objects)
            std::cout << "  " << o.block << "  " << o.name << "  " << o.coh.str()
                      << (concentrated_ok(o) ? "" : "  (not pinned to degree " + std::to_string(o.expected_degree) + ")")
                      << '\n';
        std::cout << "identity: " << rep.conditional_identity.lhs << " vs " << rep.conditional_identity.rhs << " -> "
                  << (rep.conditional_identity.pass ? "holds" : "fails")
                  << (rep.identity_conditional ? " (conditional on unpinned objects)" : "") << '\n';
        for (const auto& f : rep.flags) std::cout << "  note: " << f << '\n';
    }
    if (!rep.count_ok || !rep.gram_unitriangular || !rep.conditional_identity.pass) return kFailure;
    return rep.concentrated == rep.object_count ? kOk : kIncomplete;
}

int cmd_selftest(const Config& c)
{
    bool all = true;
    json arr = json::array();
    for (const auto& r : acceptance::run_all(c.threads)) {
        all = all && r.pass;
        if (c.format == "json")
            arr.push_back(json{{"criterion", io::num(r.id)}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        else std::cout << acceptance::format(r) << '\n';
    }
    if (c.format == "json") emit_json(arr);
    return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frobenius push-forward decompositions on SL_n incidence varieties"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--explain", cfg.explain, "print certificates");
    app.add_option("--threads", cfg.threads, "worker threads (default FLAGFROB_THREADS)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* coh = app.add_subcommand("coh", "cohomology of a line bundle on SL_n/B in characteristic p");
    coh->add_option("--n", cfg.n)->required();
    coh->add_option("--p", cfg.p)->required();
    coh->add_option("--weight", cfg.weight, "comma-separated fundamental-weight coordinates")->required();

    auto* eul = app.add_subcommand("euler", "Euler characteristic of a line bundle");
    eul->add_option("--n", cfg.n)->required();
    eul->add_option("--weight", cfg.weight)->required();

    auto* catc = app.add_subcommand("catalog", "named bundles and their presentations");
    catc->add_option("--n", cfg.n)->required();

    auto* ver = app.add_subcommand("verify", "semiorthogonality of the collection");
    ver->add_option("--variety", cfg.variety)->required();
    ver->add_option("--p", cfg.p)->required();

    auto* dec = app.add_subcommand("decompose", "decomposition of F_* O");
    dec->add_option("--variety", cfg.variety)->required();
    dec->add_option("--p", cfg.p)->required();

    auto* con = app.add_subcommand("conjecture", "block collection for general n");
    con->add_option("--n", cfg.n)->required();
    con->add_option("--p", cfg.p)->required();

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");

    // options are accepted before or after the subcommand
    for (auto* sub : {coh, eul, catc, ver, dec, con, self}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (coh->parsed()) return cmd_coh(cfg);
        if (eul->parsed()) return cmd_euler(cfg);
        if (catc->parsed()) return cmd_catalog(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (dec->parsed()) return cmd_decompose(cfg);
        if (con->parsed()) return cmd_conjecture(cfg);
        if (self->parsed()) return cmd_selftest(cfg);
    } catch (const UsageError& e) {
        std::cerr << "flagfrob: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        std::cerr << "flagfrob: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "flagfrob: " << e.what() << '\n';
        return 1;
    }
    return kUsage;
}
