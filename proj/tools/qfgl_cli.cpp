// qfgl command-line frontend: build/export graphs, run claim verifiers,
// evaluate character sums, and scan the open-problem parameter spaces.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qfgl/qfgl.hpp"

namespace {

using qfgl::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct CommonArgs {
    int p = 3;
    int m = 1;
    int n = 2;
    std::uint64_t seed = 0;
    bool seed_modulus = false;  // also derive the irreducibles from the seed
    int workers = 0;
    int b_sample = 32;
    int v_sample = 0;
    std::uint64_t cap_field = qfgl::Caps{}.field;
    std::uint64_t cap_table = qfgl::Caps{}.table;
    std::uint64_t cap_graph = qfgl::Caps{}.graph;
    std::uint64_t cap_clique = qfgl::Caps{}.clique;
    std::uint64_t cap_enum = qfgl::Caps{}.enumeration;
    std::string out = "-";
    std::string csv;

    qfgl::Caps caps() const {
        qfgl::Caps c;
        c.field = cap_field;
        c.table = cap_table;
        c.graph = cap_graph;
        c.clique = cap_clique;
        c.enumeration = cap_enum;
        return qfgl::caps_from_env(c);
    }

    qfgl::VerifyOptions options() const {
        qfgl::VerifyOptions o;
        o.seed = seed;
        o.workers = workers;
        o.b_sample = b_sample;
        o.v_sample = v_sample;
        o.caps = caps();
        return o;
    }

    qfgl::FieldCtx tower() const {
        std::optional<std::uint64_t> modulus_seed;
        if (seed_modulus) modulus_seed = seed;
        return qfgl::make_tower(p, m, n, modulus_seed, caps());
    }
};

// Flat key=value config support: expand `--config FILE` into trailing
// `--key value` arguments for every key not already given on the command
// line, so explicit flags always win.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
    auto given = [&](const std::string& key) {
        for (const auto& a : args)
            if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) return true;
        return false;
    };
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (!given(key)) {
            args.push_back("--" + key);
            args.push_back(value);
        }
    }
    return args;
}

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", "flat key=value config file; flags override it")
        ->expected(1);
    cmd->add_option("--p", args.p, "characteristic (prime)");
    cmd->add_option("--m", args.m, "degree of F_q over F_p (q = p^m)");
    cmd->add_option("--n", args.n, "extension degree of F_{q^n} over F_q");
    cmd->add_option("--seed", args.seed, "seed for all sampled enumerations");
    cmd->add_flag("--seed-modulus", args.seed_modulus,
                  "pick random (seeded) irreducibles instead of the lexicographic ones");
    cmd->add_option("--workers", args.workers, "worker threads (0 = hardware)");
    cmd->add_option("--b-sample", args.b_sample,
                    "sampled b count when q^n > 243 (0 = exhaustive)");
    cmd->add_option("--v-sample", args.v_sample,
                    "sampled subspace count per claim (0 = exhaustive)");
    cmd->add_option("--field-cap", args.cap_field, "max field size for make_tower");
    cmd->add_option("--table-cap", args.cap_table, "max field size for log tables");
    cmd->add_option("--graph-cap", args.cap_graph, "max vertices for graph construction");
    cmd->add_option("--clique-cap", args.cap_clique, "max vertices for clique search");
    cmd->add_option("--enum-cap", args.cap_enum, "max items per enumeration");
    cmd->add_option("--out", args.out, "JSON-lines output path ('-' = stdout)");
    cmd->add_option("--csv", args.csv, "CSV summary/table output path");
}

std::unique_ptr<std::ostream> open_sink(const std::string& path, std::ostream*& os) {
    if (path == "-") {
        os = &std::cout;
        return nullptr;
    }
    auto f = std::make_unique<std::ofstream>(path);
    if (!*f) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
    os = f.get();
    return f;
}

qfgl::Subspace parse_subspace(const qfgl::FieldCtx& ctx, const std::string& text) {
    json rows = json::parse(text);
    std::vector<std::vector<std::uint16_t>> basis;
    for (const auto& row : rows) basis.push_back(row.get<std::vector<std::uint16_t>>());
    return qfgl::Subspace(ctx, std::move(basis));
}

qfgl::QuadForm parse_form(const qfgl::FieldCtx& ctx, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::uint32_t> v;
    std::string item;
    while (std::getline(in, item, ',')) v.push_back(std::stoul(item));
    if (v.size() != 3)
        throw CLI::ValidationError("--form", "expected three comma-separated indices");
    return qfgl::make_form(ctx, ctx.from_index(v[0]), ctx.from_index(v[1]),
                           ctx.from_index(v[2]));
}

std::vector<qfgl::Elem> parse_elem_set(const qfgl::FieldCtx& ctx, const std::string& text) {
    json arr = json::parse(text);
    std::vector<qfgl::Elem> out;
    for (const auto& v : arr) out.push_back(ctx.from_index(v.get<std::uint64_t>()));
    return out;
}

int run_verify(const CommonArgs& args, const std::string& claim) {
    qfgl::FieldCtx ctx = args.tower();
    qfgl::VerifyOptions opts = args.options();
    std::vector<qfgl::VerifyReport> reports;
    if (claim == "all") {
        reports = qfgl::verify_all(ctx, opts);
    } else {
        reports = qfgl::verify_claim(ctx, claim, opts, /*strict=*/true);
    }

    std::ostream* os = nullptr;
    auto sink = open_sink(args.out, os);
    json header{{"type", "header"},
                {"ctx", qfgl::ctx_header(ctx)},
                {"seed", args.seed},
                {"claim", claim}};
    *os << header.dump() << "\n";
    qfgl::write_jsonl(reports, *os);
    os->flush();

    if (!args.csv.empty()) {
        std::ofstream csv(args.csv);
        qfgl::write_csv_summary(reports, csv);
    }

    std::size_t npass = 0, nfail = 0, nexc = 0, nvac = 0;
    for (const auto& r : reports) {
        switch (r.status) {
            case qfgl::Status::pass: ++npass; break;
            case qfgl::Status::fail: ++nfail; break;
            case qfgl::Status::known_exception: ++nexc; break;
            case qfgl::Status::vacuous: ++nvac; break;
        }
    }
    std::cerr << "verify " << claim << ": " << npass << " pass, " << nfail << " fail, "
              << nexc << " known_exception, " << nvac << " vacuous\n";
    return nfail == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphs from quadratic forms and F_q-subspaces of F_{q^n}"};
    app.require_subcommand(1);

    std::string claim_help = "claim id or 'all'; known claims:";
    for (const auto& id : qfgl::claim_ids()) claim_help += " " + id;

    // verify -----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run theorem/lemma/remark verifiers");
    CommonArgs vargs;
    std::string claim = "all";
    verify->add_option("claim", claim, claim_help);
    add_common_flags(verify, vargs);

    // graph ------------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "build one graph and export DOT/CSV");
    CommonArgs gargs;
    std::string gform = "1,0,1", gspace = "[]", dot_path, edges_path;
    graph->add_option("--form", gform, "form as 'a,b,c' element indices");
    graph->add_option("--subspace", gspace, "subspace as JSON rows over F_q");
    graph->add_option("--dot", dot_path, "write DOT file");
    graph->add_option("--edges", edges_path, "write edge-list CSV");
    add_common_flags(graph, gargs);

    // clique -----------------------------------------------------------------
    auto* clique = app.add_subcommand("clique", "exact clique number of one graph");
    CommonArgs cargs;
    std::string cform = "1,0,1", cspace = "[]";
    clique->add_option("--form", cform, "form as 'a,b,c' element indices");
    clique->add_option("--subspace", cspace, "subspace as JSON rows over F_q");
    add_common_flags(clique, cargs);

    // charsum ----------------------------------------------------------------
    auto* charsum = app.add_subcommand("charsum", "evaluate one character sum");
    CommonArgs sargs;
    std::string kind = "indicator", sspace = "[]", set_a, set_b, poly;
    std::uint64_t x_idx = 0, y_idx = 0, b_idx = 1, psi_idx = 1;
    charsum->add_option("--kind", kind, "indicator | affine-eta | gs | weil");
    charsum->add_option("--subspace", sspace, "subspace as JSON rows over F_q");
    charsum->add_option("--x", x_idx, "element index (indicator)");
    charsum->add_option("--y", y_idx, "shift index (affine-eta)");
    charsum->add_option("--set-a", set_a, "JSON index list (gs)");
    charsum->add_option("--set-b", set_b, "JSON index list (gs)");
    charsum->add_option("--bcoef", b_idx, "b of X^2+bXY+Y^2 (gs)");
    charsum->add_option("--psi", psi_idx, "character index a of psi_a");
    charsum->add_option("--poly", poly, "coefficients c0,c1,...,cd (weil)");
    add_common_flags(charsum, sargs);

    // scan -------------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "open-problem scanners");
    CommonArgs nargs;
    std::string scan_kind = "ratio", dims_text = "1";
    scan->add_option("kind", scan_kind, "ratio | sn");
    scan->add_option("--dims", dims_text, "comma-separated subspace dimensions (ratio)");
    add_common_flags(scan, nargs);

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(vargs, claim);

        if (graph->parsed()) {
            qfgl::FieldCtx ctx = gargs.tower();
            qfgl::Subspace V = parse_subspace(ctx, gspace);
            qfgl::QuadForm Q = parse_form(ctx, gform);
            qfgl::DiGraph G = qfgl::build_graph(Q, V, gargs.caps().graph,
                                                qfgl::resolve_workers(gargs.workers));
            if (!dot_path.empty()) {
                std::ofstream f(dot_path);
                qfgl::write_dot(G, f);
            }
            if (!edges_path.empty()) {
                std::ofstream f(edges_path);
                qfgl::write_edge_csv(G, f);
            }
            json meta{{"vertices", G.nverts},
                      {"directed_edges", G.edge_count()},
                      {"undirected", qfgl::is_undirected(G)},
                      {"form", {Q.a.index, Q.b.index, Q.c.index}},
                      {"class", qfgl::form_tag_name(Q.cls.tag)},
                      {"V", V.rows()}};
            std::cout << meta.dump() << "\n";
            return 0;
        }

        if (clique->parsed()) {
            qfgl::FieldCtx ctx = cargs.tower();
            qfgl::Subspace V = parse_subspace(ctx, cspace);
            qfgl::QuadForm Q = parse_form(ctx, cform);
            qfgl::DiGraph G = qfgl::build_graph(Q, V, cargs.caps().graph);
            qfgl::CliqueReport rep = qfgl::clique_number(G, cargs.caps().clique);
            json out{{"omega", rep.omega},
                     {"witness", rep.witness},
                     {"nodes_explored", rep.nodes_explored}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (charsum->parsed()) {
            qfgl::FieldCtx ctx = sargs.tower();
            qfgl::SumCheck sc;
            if (kind == "indicator") {
                qfgl::Subspace V = parse_subspace(ctx, sspace);
                qfgl::Subspace vstar = qfgl::dual(V);
                double s = qfgl::indicator_sum(vstar, ctx.from_index(x_idx));
                double predicted = V.contains(ctx.from_index(x_idx))
                                       ? static_cast<double>(vstar.count())
                                       : 0.0;
                sc = qfgl::make_sum_check({s, 0.0}, predicted, "indicator_sum");
                sc.ok = std::abs(s - predicted) <= qfgl::kSumSlack;
            } else if (kind == "affine-eta") {
                qfgl::Subspace V = parse_subspace(ctx, sspace);
                sc = qfgl::affine_eta_sum(V, ctx.from_index(y_idx)).check;
            } else if (kind == "gs") {
                auto A = parse_elem_set(ctx, set_a);
                auto B = parse_elem_set(ctx, set_b);
                sc = qfgl::gs_double_sum(ctx, A, B, qfgl::q_b(ctx, ctx.from_index(b_idx)),
                                         ctx.from_index(psi_idx));
            } else if (kind == "weil") {
                std::vector<qfgl::Elem> coeffs;
                std::istringstream in(poly);
                std::string item;
                while (std::getline(in, item, ','))
                    coeffs.push_back(ctx.from_index(std::stoull(item)));
                sc = qfgl::weil_sum(ctx, coeffs, ctx.from_index(psi_idx));
            } else {
                throw CLI::ValidationError("--kind", "unknown character sum kind");
            }
            std::cout << qfgl::sum_check_json(sc).dump() << "\n";
            return sc.ok ? 0 : kExitFail;
        }

        if (scan->parsed()) {
            qfgl::FieldCtx ctx = nargs.tower();
            qfgl::VerifyOptions opts = nargs.options();
            qfgl::ScanReport rep;
            if (scan_kind == "ratio") {
                std::vector<int> dims;
                std::istringstream in(dims_text);
                std::string item;
                while (std::getline(in, item, ',')) dims.push_back(std::stoi(item));
                rep = qfgl::scan_clique_ratio(ctx, dims, opts);
            } else if (scan_kind == "sn") {
                rep = qfgl::estimate_s(ctx, opts);
            } else {
                throw CLI::ValidationError("kind", "unknown scan kind");
            }
            std::ostream* os = nullptr;
            auto sink = open_sink(nargs.out, os);
            json summary{{"type", "scan"}, {"scan", rep.scan}, {"summary", rep.summary}};
            *os << summary.dump() << "\n";
            for (const auto& row : rep.rows) *os << row.dump() << "\n";
            os->flush();
            if (!nargs.csv.empty()) {
                std::ofstream csv(nargs.csv);
                qfgl::write_scan_csv(rep, csv);
            }
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const qfgl::Error& e) {
        std::cerr << e.what() << "\n";
        return e.is_cap() ? kExitCap : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
