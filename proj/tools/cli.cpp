#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ktmax/canonical.hpp"
#include "ktmax/cluster.hpp"
#include "ktmax/colex.hpp"
#include "ktmax/enumerate.hpp"
#include "ktmax/graph6.hpp"
#include "ktmax/multiset_bound.hpp"
#include "ktmax/report.hpp"
#include "ktmax/verify.hpp"

namespace ktmax::cli {

namespace {

using nlohmann::json;

std::string format_multiset(const DegreeMultiset& d) {
    std::ostringstream out;
    bool first = true;
    for (auto it = d.counts.rbegin(); it != d.counts.rend(); ++it) {
        if (!first) out << " ";
        out << it->second << "x" << it->first;
        first = false;
    }
    return first ? "empty" : out.str();
}

std::string format_rational(const Rational& q) {
    std::ostringstream out;
    out << q.numerator();
    if (q.denominator() != 1) out << "/" << q.denominator();
    return out.str();
}

IngestResult read_graphs(const std::string& path, std::istream& in, std::ostream& err) {
    IngestResult res = path == "-" ? ingest_graph6_stream(in) : ingest_graph6_file(path);
    for (const IngestDiagnostic& d : res.diagnostics)
        err << "line " << d.line_number << ": " << d.message << "\n";
    return res;
}

void print_failures(std::ostream& out, const VerificationReport& rep, std::size_t limit = 20) {
    std::size_t shown = 0;
    for (const CaseOutcome& c : rep.cases) {
        if (c.pass) continue;
        out << "  FAIL " << c.id;
        if (!c.graph6.empty()) out << "  graph6=" << c.graph6;
        if (!c.values.is_null() && !c.values.empty()) out << "  " << c.values.dump();
        out << "\n";
        if (++shown >= limit) {
            out << "  ... (" << rep.failures << " failures total)\n";
            break;
        }
    }
}

int cmd_verify(const std::string& suite, const SuiteParams& params, const std::string& format,
               std::ostream& out) {
    auto started = std::chrono::steady_clock::now();
    VerificationReport rep = run_suite(suite, params);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (format == "jsonl") {
        write_jsonl(out, rep);
    } else {
        if (suite == "r8-table") {
            out << "m    x  3M*   3g3\n";
            for (const CaseOutcome& c : rep.cases) {
                if (!c.values.contains("m")) continue;
                out << c.values["m"].get<std::int64_t>() << "   " << c.values["x"].get<int>()
                    << "  " << c.values["3M*"].get<std::int64_t>() << "   "
                    << c.values["3g3"].get<std::int64_t>() << "\n";
            }
        }
        out << "suite " << rep.suite << ": " << rep.total_cases << " cases, " << rep.failures
            << " failures -> " << (rep.pass() ? "PASS" : "FAIL") << "  (" << seconds << "s, seed "
            << rep.seed << ")\n";
        print_failures(out, rep);
    }
    return rep.pass() ? 0 : 1;
}

int cmd_report(const std::vector<std::string>& paths, std::istream& in, std::ostream& out,
               std::ostream& err) {
    std::vector<VerificationReport> reports;
    auto consume = [&](std::istream& stream) {
        std::vector<VerificationReport> parsed = parse_jsonl(stream);
        reports.insert(reports.end(), parsed.begin(), parsed.end());
    };
    try {
        if (paths.empty()) {
            consume(in);
        } else {
            for (const std::string& p : paths) {
                if (p == "-") {
                    consume(in);
                } else {
                    std::ifstream f(p);
                    if (!f) throw std::runtime_error("cannot open " + p);
                    consume(f);
                }
            }
        }
    } catch (const std::exception& e) {
        err << "report: " << e.what() << "\n";
        return 2;
    }
    std::uint64_t failures = 0;
    for (const VerificationReport& rep : reports) {
        out << rep.suite << ": " << rep.total_cases << " cases, " << rep.failures << " failures -> "
            << (rep.pass() ? "PASS" : "FAIL") << "\n";
        failures += rep.failures;
    }
    out << reports.size() << " report(s), " << failures << " failure(s) total\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact verification and search for clique maximization under an edge budget "
                 "and a degree cap"};
    app.require_subcommand(1);

    std::uint64_t default_budget = 0;
    if (const char* env = std::getenv("KTMAX_BUDGET")) default_budget = std::strtoull(env, nullptr, 10);

    // colex
    auto* colex_cmd = app.add_subcommand("colex", "build a colex or rainbow-colex graph");
    std::int64_t colex_b = -1, colex_m = -1;
    int colex_omega = 0, colex_t = 3;
    colex_cmd->add_option("--b", colex_b, "edge count of the colex graph C(b)");
    colex_cmd->add_option("--omega", colex_omega, "rainbow part count");
    colex_cmd->add_option("--m", colex_m, "edge count of the rainbow graph");
    colex_cmd->add_option("--t", colex_t, "clique size to count");

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "write m = a C(r+1,2) + b with b = [c,d]");
    std::int64_t dec_m = 0;
    int dec_r = 0;
    dec_cmd->add_option("--m", dec_m, "edge budget")->required();
    dec_cmd->add_option("--r", dec_r, "degree cap")->required();

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "closed-form and multiset upper bounds");
    std::int64_t bound_m = 0;
    int bound_r = 0, bound_t = 3;
    std::int64_t bound_k = 0;
    bound_cmd->add_option("--m", bound_m)->required();
    bound_cmd->add_option("--r", bound_r)->required();
    bound_cmd->add_option("--t", bound_t);
    bound_cmd->add_option("--k", bound_k, "red-edge deficit (default: 5 for r=8, ceil(r/2) otherwise)");

    // clusters
    auto* clusters_cmd = app.add_subcommand("clusters", "analyze tight cliques of graph6 inputs");
    std::string clusters_input = "-";
    int clusters_r = 0;
    std::string clusters_format = "table";
    clusters_cmd->add_option("--input", clusters_input, "graph6 file or - for stdin");
    clusters_cmd->add_option("--r", clusters_r)->required();
    clusters_cmd->add_option("--format", clusters_format)->check(CLI::IsMember({"table", "jsonl"}));

    // fold
    auto* fold_cmd = app.add_subcommand("fold", "fold each input graph at a cluster");
    std::string fold_input = "-";
    int fold_r = 0, fold_index = -1;
    fold_cmd->add_option("--input", fold_input);
    fold_cmd->add_option("--r", fold_r)->required();
    fold_cmd->add_option("--cluster", fold_index, "cluster index (default: first foldable)");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive f_t(m,r) by isomorph-free enumeration");
    SearchSpec spec;
    std::string checkpoint_path;
    bool search_connected = false;
    int search_omega = 0;
    search_cmd->add_option("--m", spec.m)->required();
    search_cmd->add_option("--r", spec.r)->required();
    search_cmd->add_option("--t", spec.t);
    search_cmd->add_flag("--connected", search_connected);
    search_cmd->add_option("--omega", search_omega, "clique number cap");
    search_cmd->add_option("--budget", spec.budget, "max classes visited (0 = unlimited)");
    search_cmd->add_option("--jobs", spec.jobs);
    search_cmd->add_option("--split", spec.split_depth, "edge level distributed to workers");
    search_cmd->add_option("--vertex-cap", spec.vertex_cap);
    search_cmd->add_option("--checkpoint", checkpoint_path, "resume file for budgeted runs");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    SuiteParams params;
    std::string verify_format = "table";
    verify_cmd->add_option("suite", suite, "one of: s-2 compincr QR half D2 b1b2 seqopt r8-table main-desk")
        ->required();
    verify_cmd->add_option("--seed", params.seed);
    verify_cmd->add_option("--count", params.count);
    verify_cmd->add_option("--r-max", params.r_max);
    verify_cmd->add_option("--m-max", params.m_max);
    verify_cmd->add_option("--search-m-max", params.search_m_max);
    verify_cmd->add_option("--search-m-max-small-r", params.search_m_max_small_r);
    verify_cmd->add_option("--s-max", params.s_max);
    verify_cmd->add_option("--t", params.t_values, "clique sizes");
    verify_cmd->add_option("--jobs", params.jobs);
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"table", "jsonl"}));

    // report
    auto* report_cmd = app.add_subcommand("report", "aggregate structured suite outputs");
    std::vector<std::string> report_paths;
    report_cmd->add_option("files", report_paths, "jsonl files ('-' for stdin)");

    std::vector<const char*> argv;
    argv.push_back("ktmax");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*colex_cmd) {
            if ((colex_b < 0) == (colex_omega == 0)) {
                err << "colex: give either --b, or --omega with --m\n";
                return 2;
            }
            Graph g;
            if (colex_b >= 0) {
                g = colex_graph(colex_b);
            } else {
                if (colex_m < 0) {
                    err << "colex: --omega requires --m\n";
                    return 2;
                }
                g = rainbow_colex_graph(RainbowSpec{colex_omega, kMaxVertices}, colex_m);
            }
            out << to_graph6(g) << "\n";
            out << "n=" << g.vertex_count() << " e=" << g.edge_count() << " k_" << colex_t << "="
                << count_cliques(g, colex_t) << "\n";
            return 0;
        }

        if (*dec_cmd) {
            ColexDecomposition d = decompose(dec_m, dec_r);
            out << "m=" << d.m << " r=" << d.r << " a=" << d.a << " b=" << d.b << " c=" << d.c
                << " d=" << d.d << "\n";
            return 0;
        }

        if (*bound_cmd) {
            if (bound_k == 0) bound_k = bound_r == 8 ? 5 : (bound_r + 1) / 2;
            out << "g_" << bound_t << "(" << bound_m << "," << bound_r << ") = "
                << g_t(bound_m, bound_r, bound_t) << "\n";
            if (bound_t >= 3 && bound_t <= bound_r + 1)
                out << "asymptotic bound: "
                    << format_rational(asymptotic_upper_bound(bound_m, bound_r, bound_t)) << "\n";
            MkResult mk = mk_oracle(bound_m, bound_r, bound_k, false);
            out << "3M_" << bound_k << " = " << mk.three_m << "  witness: " << format_multiset(mk.witness)
                << "\n";
            if (2 * bound_m >= bound_r) {
                MkResult star = mk_oracle(bound_m, bound_r, bound_k, true);
                out << "3M*_" << bound_k << " = " << star.three_m
                    << "  witness: " << format_multiset(star.witness) << "\n";
            }
            return 0;
        }

        if (*clusters_cmd) {
            IngestResult res = read_graphs(clusters_input, in, err);
            for (std::size_t gi = 0; gi < res.graphs.size(); ++gi) {
                const Graph& g = res.graphs[gi];
                std::vector<Cluster> found = clusters(g, clusters_r);
                if (clusters_format == "jsonl") {
                    for (const Cluster& cl : found) {
                        ExclusionVerdict v = excluded_red_predicate(cl, clusters_r);
                        json rec{{"schema", kReportSchema},
                                 {"kind", "cluster"},
                                 {"graph", gi},
                                 {"graph6", to_graph6(g)},
                                 {"T", cl.t_vertices},
                                 {"S", cl.s_vertices},
                                 {"red_edges", cl.red_edges()},
                                 {"blue_edges", cl.blue_edges()},
                                 {"red_graph6", to_graph6(cl.red)},
                                 {"Q", q_of_red_graph(cl.red, clusters_r)},
                                 {"excluded_by", v.citations}};
                        out << rec.dump() << "\n";
                    }
                } else {
                    out << "graph " << gi << " (" << to_graph6(g) << "): " << found.size()
                        << " cluster(s)\n";
                    for (const Cluster& cl : found) {
                        ExclusionVerdict v = excluded_red_predicate(cl, clusters_r);
                        out << "  t=" << cl.t() << " s=" << cl.s() << " e(R)=" << cl.red_edges()
                            << " e(B)=" << cl.blue_edges()
                            << " Q=" << q_of_red_graph(cl.red, clusters_r) << " excluded_by=";
                        if (v.citations.empty()) {
                            out << "none";
                        } else {
                            for (std::size_t i = 0; i < v.citations.size(); ++i)
                                out << (i ? "," : "") << v.citations[i];
                        }
                        out << "\n";
                    }
                }
            }
            return res.diagnostics.empty() ? 0 : 1;
        }

        if (*fold_cmd) {
            IngestResult res = read_graphs(fold_input, in, err);
            int status = res.diagnostics.empty() ? 0 : 1;
            for (const Graph& g : res.graphs) {
                std::vector<Cluster> found = clusters(g, fold_r);
                const Cluster* chosen = nullptr;
                if (fold_index >= 0) {
                    if (fold_index < static_cast<int>(found.size())) chosen = &found[fold_index];
                } else {
                    for (const Cluster& cl : found)
                        if (cl.blue_edges() >= cl.red_edges()) {
                            chosen = &cl;
                            break;
                        }
                }
                if (chosen == nullptr) {
                    err << "fold: no foldable cluster in " << to_graph6(g) << "\n";
                    status = 1;
                    continue;
                }
                try {
                    Graph folded = fold(g, *chosen);
                    out << to_graph6(g) << " -> " << to_graph6(folded) << "  k_3: "
                        << count_cliques(g, 3) << " -> " << count_cliques(folded, 3) << "\n";
                } catch (const std::domain_error& e) {
                    err << e.what() << "\n";
                    status = 1;
                }
            }
            return status;
        }

        if (*search_cmd) {
            if (search_connected) spec.connected_only = true;
            if (search_omega > 0) spec.clique_number_cap = search_omega;
            if (spec.budget == 0) spec.budget = default_budget;

            SearchCheckpoint resume;
            bool have_resume = false;
            if (!checkpoint_path.empty()) {
                std::ifstream f(checkpoint_path);
                if (f) {
                    resume = read_checkpoint(f);
                    have_resume = true;
                }
            }
            try {
                SearchResult res = compute_f(spec, have_resume ? &resume : nullptr);
                out << "f_" << spec.t << "(" << spec.m << "," << spec.r << ") = " << res.f_value
                    << "  g = " << res.g_value << "  match = " << (res.matches_conjecture ? "yes" : "no")
                    << "  classes = " << res.graphs_visited << "\n";
                for (const std::string& w : res.extremal_graph6) out << w << "\n";
                return 0;
            } catch (const BudgetExceededError& e) {
                err << e.what() << "\n";
                if (!checkpoint_path.empty()) {
                    std::ofstream f(checkpoint_path, std::ios::trunc);
                    write_checkpoint(f, e.checkpoint);
                    err << "checkpoint written to " << checkpoint_path << "\n";
                }
                err << "partial f >= " << e.partial.f_value << " over " << e.partial.graphs_visited
                    << " classes\n";
                return 1;
            }
        }

        if (*verify_cmd) return cmd_verify(suite, params, verify_format, out);
        if (*report_cmd) return cmd_report(report_paths, in, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace ktmax::cli
