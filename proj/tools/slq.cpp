// slq — construct the extremal graphs, compute signless Laplacian spectral
// radii, enumerate trees, decide tree containment, audit the proof
// inequalities on concrete graphs, and search small graph classes.

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "slq/audit.hpp"
#include "slq/graph6.hpp"
#include "slq/search.hpp"
#include "slq/serialize.hpp"
#include "slq/verify.hpp"

namespace {

using slq::ordered_json;

struct GlobalOpts {
    double tol = 1e-10;
    std::optional<std::uint64_t> seed;
    int workers = 1;
    bool no_timestamp = false;
};

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

ordered_json config_json(const GlobalOpts& g, const std::string& subcommand,
                         const ordered_json& params) {
    ordered_json c;
    c["command"] = "slq " + subcommand;
    c["params"] = params;
    c["tol"] = slq::round12(g.tol);
    if (g.seed)
        c["seed"] = *g.seed;
    else
        c["seed"] = nullptr;
    c["workers"] = g.workers;
    if (!g.no_timestamp) c["timestamp"] = iso_now();
    return c;
}

void print_csv_header(const GlobalOpts& g, const std::string& subcommand,
                      const std::string& params) {
    std::cout << "# slq " << subcommand << "; " << params << "; tol=" << slq::fmt12(g.tol)
              << "; workers=" << g.workers;
    if (g.seed) std::cout << "; seed=" << *g.seed;
    if (!g.no_timestamp) std::cout << "; timestamp=" << iso_now();
    std::cout << "\n";
}

slq::Graph construct_family(const std::string& family, int n, int k, int a, int b) {
    using namespace slq;
    if (family == "S") return make_S(n, k);
    if (family == "S+") return make_S_plus(n, k);
    if (family == "complete") return make_complete(n);
    if (family == "empty") return make_empty(n);
    if (family == "path") return make_path(n);
    if (family == "cycle") return make_cycle(n);
    if (family == "bipartite") return make_complete_bipartite(a, b);
    if (family == "lemma24-plus") return make_lemma24_graph(k, Lemma24Variant::plus);
    if (family == "lemma24-p") return make_lemma24_graph(k, Lemma24Variant::p);
    if (family == "lemma24-m") return make_lemma24_graph(k, Lemma24Variant::m);
    throw std::invalid_argument("unknown family '" + family +
                                "' (S, S+, complete, empty, path, cycle, bipartite, "
                                "lemma24-plus, lemma24-p, lemma24-m)");
}

slq::Graph read_graph_arg(const std::string& g6, const std::string& family, int n, int k, int a,
                          int b) {
    if (!g6.empty()) {
        if (!family.empty())
            throw std::invalid_argument("give either a graph6 string or a construction, not both");
        return slq::graph6_decode(g6);
    }
    if (family.empty())
        throw std::invalid_argument("no input graph: pass --g6 or --construct");
    return construct_family(family, n, k, a, b);
}

int run_verify_suites(const std::vector<slq::SuiteResult>& suites) {
    bool all = true;
    for (const auto& s : suites) {
        for (const auto& line : s.lines) {
            std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << s.name << ": " << line.label;
            if (!line.detail.empty()) std::cout << " — " << line.detail;
            std::cout << "\n";
            all = all && line.pass;
        }
    }
    std::cout << (all ? "VERIFY OK" : "VERIFY FAILED") << "\n";
    return all ? 0 : 1;
}

std::string spectra_csv_row(const slq::Graph& g, const std::string& family, int n, int k,
                            double tol) {
    using namespace slq;
    const SpectralResult r = spectral_radius(g, tol);
    std::string q_closed;
    if (family == "S")
        q_closed = fmt12(q_S_closed(n, k));
    else if (family == "S+" && k >= 2)
        q_closed = fmt12(q_S_plus_closed(n, k));
    std::string row = std::to_string(g.order()) + "," + (family.empty() ? "" : std::to_string(k)) +
                      "," + fmt12(r.q) + "," + q_closed + "," + fmt12(r.residual) + "," +
                      std::to_string(r.iterations);
    if (!r.converged) row += ",UNCONVERGED";
    return row;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signless Laplacian spectral radius toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("SLQ_WORKERS")) g.workers = std::max(1, std::atoi(env));
    app.add_option("--tol", g.tol, "power iteration tolerance")->capture_default_str();
    std::uint64_t seed_in = 0;
    auto* seed_opt = app.add_option("--seed", seed_in, "seed for all randomness");
    app.add_option("--workers", g.workers, "worker thread cap")->capture_default_str();
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp from output headers");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a graph, print graph6");
    std::string c_family, c_op, c_g6, c_g6b;
    int c_n = 0, c_k = 0, c_a = 0, c_b = 0;
    c_cmd->add_option("--family", c_family, "S, S+, complete, empty, path, cycle, bipartite, lemma24-{plus,p,m}");
    c_cmd->add_option("--n", c_n);
    c_cmd->add_option("--k", c_k);
    c_cmd->add_option("--a", c_a);
    c_cmd->add_option("--b", c_b);
    c_cmd->add_option("--op", c_op, "join, union or complement of given graphs");
    c_cmd->add_option("--g6", c_g6, "first operand (graph6)");
    c_cmd->add_option("--g6b", c_g6b, "second operand (graph6)");

    // spectra
    auto* s_cmd = app.add_subcommand("spectra", "spectral radius as CSV");
    std::string s_family, s_g6;
    int s_n = 0, s_k = 0, s_a = 0, s_b = 0, s_n_hi = 0;
    s_cmd->add_option("--construct", s_family, "construction family");
    s_cmd->add_option("--n", s_n);
    s_cmd->add_option("--k", s_k);
    s_cmd->add_option("--a", s_a);
    s_cmd->add_option("--b", s_b);
    s_cmd->add_option("--n-hi", s_n_hi, "scan n..n-hi (constructions only)");
    s_cmd->add_option("--g6", s_g6, "graph6 input");

    // trees
    auto* t_cmd = app.add_subcommand("trees", "enumerate free trees on t vertices");
    int t_t = 0;
    bool t_count = false, t_g6 = false;
    t_cmd->add_option("--t", t_t)->required();
    t_cmd->add_flag("--count", t_count, "print the total only");
    t_cmd->add_flag("--graph6", t_g6, "emit graph6 instead of level sequences");

    // contains
    auto* n_cmd = app.add_subcommand("contains", "tree containment in a host graph");
    std::string n_host, n_family, n_tree;
    int n_n = 0, n_k = 0, n_a = 0, n_b = 0, n_all = 0;
    n_cmd->add_option("--host", n_host, "host graph6");
    n_cmd->add_option("--construct", n_family, "host construction family");
    n_cmd->add_option("--n", n_n);
    n_cmd->add_option("--k", n_k);
    n_cmd->add_option("--a", n_a);
    n_cmd->add_option("--b", n_b);
    n_cmd->add_option("--tree", n_tree, "tree level sequence, e.g. \"0 1 2 3 1 2\"");
    n_cmd->add_option("--all", n_all, "check every tree on this many vertices");

    // audit
    auto* a_cmd = app.add_subcommand("audit", "per-graph inequality audit (JSON)");
    std::string a_g6, a_family;
    int a_n = 0, a_k = 0, a_a = 0, a_b = 0, a_grid_lo = 0, a_grid_hi = 0;
    bool a_prime = false, a_grid = false;
    a_cmd->add_option("--g6", a_g6);
    a_cmd->add_option("--construct", a_family);
    a_cmd->add_option("--n", a_n);
    a_cmd->add_option("--k", a_k, "threshold parameter k")->required();
    a_cmd->add_option("--a", a_a);
    a_cmd->add_option("--b", a_b);
    a_cmd->add_flag("--prime", a_prime, "audit the 2k+3 (one inner edge allowed) case");
    a_cmd->add_flag("--grid", a_grid, "CSV over S/S+ for n in --n-lo..--n-hi");
    a_cmd->add_option("--n-lo", a_grid_lo);
    a_cmd->add_option("--n-hi", a_grid_hi);

    // search
    auto* x_cmd = app.add_subcommand("search", "extremal search (JSON report)");
    std::string x_mode = "hillclimb", x_trace;
    int x_n = 0, x_k = 0, x_restarts = 10, x_steps = 2000, x_max_inner = 3;
    bool x_prime = false;
    x_cmd->add_option("--mode", x_mode, "exhaustive, family or hillclimb")
        ->check(CLI::IsMember({"exhaustive", "family", "hillclimb"}));
    x_cmd->add_option("--n", x_n)->required();
    x_cmd->add_option("--k", x_k)->required();
    x_cmd->add_flag("--prime", x_prime);
    x_cmd->add_option("--restarts", x_restarts)->capture_default_str();
    x_cmd->add_option("--steps", x_steps)->capture_default_str();
    x_cmd->add_option("--max-inner-edges", x_max_inner)->capture_default_str();
    x_cmd->add_option("--trace", x_trace, "write accepted-move CSV to this file");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string v_suite = "all";
    v_cmd->add_option("--suite", v_suite,
                      "lemma21, lemma22, lemma23, lemma24, lemma2, trees, identity, anchors, "
                      "audit-grid, family, exhaustive, hillclimb, all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);    // --help
        app.exit(e);
        return 2;
    }
    if (seed_opt->count()) g.seed = seed_in;

    try {
        if (*c_cmd) {
            using namespace slq;
            Graph out(1);
            if (!c_op.empty()) {
                if (c_op == "complement") {
                    out = complement(graph6_decode(c_g6));
                } else if (c_op == "join" || c_op == "union") {
                    const Graph x = graph6_decode(c_g6), y = graph6_decode(c_g6b);
                    out = c_op == "join" ? join(x, y) : disjoint_union(x, y);
                } else {
                    throw std::invalid_argument("unknown op '" + c_op + "'");
                }
            } else {
                out = construct_family(c_family, c_n, c_k, c_a, c_b);
            }
            std::cout << graph6_encode(out) << "\n";
            return 0;
        }

        if (*s_cmd) {
            print_csv_header(g, "spectra",
                             s_family.empty() ? "input=graph6" : "construct=" + s_family);
            std::cout << "n,k,q_numeric,q_closed,residual,iterations\n";
            if (!s_g6.empty()) {
                std::cout << spectra_csv_row(slq::graph6_decode(s_g6), "", 0, 0, g.tol) << "\n";
            } else if (!s_family.empty()) {
                const int hi = s_n_hi > 0 ? s_n_hi : s_n;
                for (int n = s_n; n <= hi; ++n)
                    std::cout << spectra_csv_row(construct_family(s_family, n, s_k, s_a, s_b),
                                                 s_family, n, s_k, g.tol)
                              << "\n";
            } else {
                std::string line;
                while (std::getline(std::cin, line)) {
                    if (line.empty()) continue;
                    std::cout << spectra_csv_row(slq::graph6_decode(line), "", 0, 0, g.tol)
                              << "\n";
                }
            }
            return 0;
        }

        if (*t_cmd) {
            slq::TreeStream stream(t_t);
            long long count = 0;
            while (auto tree = stream.next()) {
                ++count;
                if (t_count) continue;
                if (t_g6)
                    std::cout << slq::graph6_encode(slq::tree_to_graph(*tree)) << "\n";
                else
                    std::cout << slq::level_sequence_string(*tree) << "\n";
            }
            if (t_count) std::cout << count << "\n";
            return 0;
        }

        if (*n_cmd) {
            using namespace slq;
            const Graph host = read_graph_arg(n_host, n_family, n_n, n_k, n_a, n_b);
            ordered_json j;
            ordered_json params;
            params["host_order"] = host.order();
            params["host_edges"] = host.edge_count();
            if (n_all > 0) {
                params["all"] = n_all;
                j["config"] = config_json(g, "contains", params);
                j["report"] = missing_report_json(contains_all_trees(host, n_all));
            } else if (!n_tree.empty()) {
                const CanonicalTree tree = parse_level_sequence(n_tree);
                params["tree"] = level_sequence_string(tree);
                j["config"] = config_json(g, "contains", params);
                const auto emb = contains_tree(host, tree);
                j["present"] = emb.has_value();
                if (emb) j["embedding"] = emb->map;
            } else {
                throw std::invalid_argument("contains: pass --tree or --all");
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*a_cmd) {
            using namespace slq;
            if (a_grid) {
                if (a_grid_lo < 1 || a_grid_hi < a_grid_lo)
                    throw std::invalid_argument("audit --grid: need --n-lo <= --n-hi");
                print_csv_header(g, "audit --grid",
                                 "k=" + std::to_string(a_k) + "; n=" + std::to_string(a_grid_lo) +
                                     ".." + std::to_string(a_grid_hi));
                std::cout << "family,n,k,q,residual,L,Lprime,conclusions_hold,hypothesis_met,"
                             "hard_failure\n";
                bool hard = false;
                for (int n = a_grid_lo; n <= a_grid_hi; ++n)
                    for (bool prime : {false, true}) {
                        const Graph gr = prime ? make_S_plus(n, a_k) : make_S(n, a_k);
                        const AuditReport rep = run_audit(gr, a_k, prime, g.tol);
                        bool concl = true, hyp = false;
                        for (const auto& e : rep.entries) {
                            if (e.id == "top-set-min-degree" || e.id == "top-set-size" ||
                                e.id == "top-set-component-floor" ||
                                e.id == "common-neighborhood-structure") {
                                concl = concl && e.holds;
                                hyp = hyp || e.hypothesis_met;
                            }
                        }
                        hard = hard || rep.hard_failure();
                        std::cout << (prime ? "S+," : "S,") << n << "," << a_k << ","
                                  << fmt12(rep.q) << "," << fmt12(rep.residual) << ","
                                  << rep.L_size << "," << rep.Lprime_size << ","
                                  << (concl ? "1," : "0,") << (hyp ? "1," : "0,")
                                  << (rep.hard_failure() ? 1 : 0) << "\n";
                    }
                return hard ? 1 : 0;
            }
            const Graph gr = read_graph_arg(a_g6, a_family, a_n, a_k, a_a, a_b);
            const AuditReport rep = run_audit(gr, a_k, a_prime, g.tol);
            ordered_json j;
            ordered_json params;
            params["k"] = a_k;
            params["prime"] = a_prime;
            j["config"] = config_json(g, "audit", params);
            j["report"] = audit_report_json(rep);
            std::cout << j.dump(2) << "\n";
            return rep.hard_failure() ? 1 : 0;
        }

        if (*x_cmd) {
            using namespace slq;
            if (!g.seed && x_mode == "hillclimb") g.seed = std::random_device{}();
            SearchReport rep;
            std::vector<std::string> trace;
            if (x_mode == "exhaustive")
                rep = exhaustive_search(x_n, x_k, x_prime, g.workers, g.tol);
            else if (x_mode == "family")
                rep = family_scan(x_n, x_k, x_prime, x_max_inner, g.tol);
            else
                rep = hill_climb(x_n, x_k, x_prime, *g.seed, x_restarts, x_steps, g.workers,
                                 g.tol, x_trace.empty() ? nullptr : &trace);
            if (!x_trace.empty()) {
                std::ofstream f(x_trace);
                f << "restart,step,action,u,v,q_before,q_after\n";
                for (const auto& row : trace) f << row << "\n";
            }
            ordered_json params;
            params["mode"] = x_mode;
            params["n"] = x_n;
            params["k"] = x_k;
            params["prime"] = x_prime;
            if (x_mode == "hillclimb") {
                params["restarts"] = x_restarts;
                params["steps"] = x_steps;
            }
            if (x_mode == "family") params["max_inner_edges"] = x_max_inner;
            ordered_json j;
            j["config"] = config_json(g, "search", params);
            j["report"] = search_report_json(rep);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*v_cmd) {
            using namespace slq;
            std::vector<SuiteResult> suites;
            auto want = [&](const std::string& name) {
                return v_suite == name || v_suite == "all" ||
                       (v_suite == "lemma2" &&
                        (name == "lemma21" || name == "lemma22" || name == "lemma23" ||
                         name == "lemma24"));
            };
            if (want("lemma21")) {
                suites.push_back(verify_closed_forms(g.tol));
                suites.push_back(verify_bound_chain(false));
                suites.push_back(verify_special_case(g.tol));
            }
            if (want("lemma22")) suites.push_back(verify_edge_bound_random());
            if (want("lemma23")) suites.push_back(verify_bipartite());
            if (want("lemma24")) suites.push_back(verify_constructions());
            if (want("trees")) suites.push_back(verify_tree_counts());
            if (want("identity")) suites.push_back(verify_identity_corpus(g.tol));
            if (want("anchors")) suites.push_back(verify_anchors());
            if (want("audit-grid")) suites.push_back(verify_audit_grid(g.tol));
            if (want("family")) suites.push_back(verify_family(g.tol));
            if (want("exhaustive")) suites.push_back(verify_exhaustive(g.tol));
            if (want("hillclimb")) suites.push_back(verify_hillclimb(g.tol));
            if (suites.empty())
                throw std::invalid_argument("unknown suite '" + v_suite + "'");
            return run_verify_suites(suites);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
