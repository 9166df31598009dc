#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <unordered_map>

#include "slq/containment.hpp"
#include "slq/graph.hpp"
#include "slq/graph6.hpp"
#include "slq/isomorphism.hpp"
#include "slq/randgraph.hpp"
#include "slq/spectra.hpp"
#include "slq/trees.hpp"

namespace slq {

struct FamilyCandidate {
    std::string pattern;    // canonical graph6 of the inner edge pattern
    int pattern_edges = 0;
    bool member = false;
    double q = 0.0;
};

// Result of one search over graphs missing some tree on 2k+2 (or 2k+3)
// vertices. Membership of best_graph is always certified by re-checking that
// missing_tree_witness does not embed into it.
struct SearchReport {
    std::string mode;
    int n = 0, k = 0;
    bool prime = false;
    std::string best_graph;    // graph6
    double best_q = 0.0;
    double q_of_S = 0.0;       // radius of S_{n,k} (or S+_{n,k}) for comparison
    long long candidates_examined = 0;
    std::optional<std::uint64_t> seed;
    CanonicalTree missing_tree_witness;
    long long labeled_graphs_scanned = 0;          // exhaustive mode
    std::vector<FamilyCandidate> family_candidates; // family mode
    std::vector<std::string> restart_inits;        // hillclimb mode
    std::optional<bool> matches_construction;      // hillclimb mode
    std::string note;
};

namespace detail {

inline int tree_order(int k, bool prime) { return prime ? 2 * k + 3 : 2 * k + 2; }

inline bool in_class(const Graph& g, int k, bool prime) {
    return !contains_all_trees(g, tree_order(k, prime)).all_present;
}

inline double q_of_construction(int n, int k, bool prime, double tol) {
    if (!prime) return n > k ? q_S_closed(n, k) : std::numeric_limits<double>::quiet_NaN();
    if (n < k + 2) return std::numeric_limits<double>::quiet_NaN();
    if (k >= 2) return q_S_plus_closed(n, k);
    return spectral_radius(make_S_plus(n, k), tol).q;    // no closed form kept for k = 1
}

// Re-derive and double-check the witness for the reported best graph.
inline void certify(SearchReport& rep, const Graph& best) {
    const MissingReport m = contains_all_trees(best, tree_order(rep.k, rep.prime));
    if (m.all_present)
        throw std::logic_error("search: best graph is not in the target class");
    rep.missing_tree_witness = *m.first_missing;
    if (contains_tree(best, rep.missing_tree_witness))
        throw std::logic_error("search: witness re-verification failed");
}

// --- mask-level helpers for the exhaustive scan (n <= 7) -------------------

struct MaskSpace {
    int n = 0;
    int pairs = 0;
    int pi[8][8] = {};    // pair index of (i,j)
    std::uint32_t touch[8] = {};    // adj bits contributed per mask bit, below
    int bit_u[32] = {}, bit_v[32] = {};

    explicit MaskSpace(int order) : n(order) {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pi[i][j] = pi[j][i] = idx;
                bit_u[idx] = i;
                bit_v[idx] = j;
                ++idx;
            }
        pairs = idx;
    }

    void adjacency(std::uint32_t mask, std::uint16_t adj[8]) const {
        for (int i = 0; i < n; ++i) adj[i] = 0;
        while (mask) {
            const int b = std::countr_zero(mask);
            adj[bit_u[b]] |= std::uint16_t(1) << bit_v[b];
            adj[bit_v[b]] |= std::uint16_t(1) << bit_u[b];
            mask &= mask - 1;
        }
    }
};

inline std::uint64_t mask_invariant(const MaskSpace& sp, std::uint32_t mask) {
    std::uint16_t adj[8];
    sp.adjacency(mask, adj);
    const int n = sp.n;
    int deg[8];
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
    // per-vertex profile (deg, sorted neighbor degs), sorted over vertices
    std::array<std::array<int, 9>, 8> prof{};
    for (int v = 0; v < n; ++v) {
        prof[v][0] = deg[v];
        int nd[8], c = 0;
        std::uint16_t a = adj[v];
        while (a) {
            nd[c++] = deg[std::countr_zero(a)];
            a &= a - 1;
        }
        std::sort(nd, nd + c);
        for (int i = 0; i < c; ++i) prof[v][i + 1] = nd[i];
        for (int i = c; i < 8; ++i) prof[v][i + 1] = -1;
    }
    std::sort(prof.begin(), prof.begin() + n);
    // triangles (x3) and connected components
    long long tri = 0;
    std::uint32_t em = mask;
    while (em) {
        const int b = std::countr_zero(em);
        tri += std::popcount(std::uint16_t(adj[sp.bit_u[b]] & adj[sp.bit_v[b]]));
        em &= em - 1;
    }
    int comps = 0;
    std::uint16_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if (seen & (std::uint16_t(1) << v)) continue;
        ++comps;
        std::uint16_t frontier = std::uint16_t(1) << v;
        while (frontier) {
            seen |= frontier;
            std::uint16_t next = 0;
            std::uint16_t f = frontier;
            while (f) {
                next |= adj[std::countr_zero(f)];
                f &= f - 1;
            }
            frontier = next & ~seen;
        }
    }
    std::uint64_t h = 1469598103934665603ULL;
    auto eat = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    eat(static_cast<std::uint64_t>(std::popcount(mask)));
    eat(static_cast<std::uint64_t>(tri));
    eat(static_cast<std::uint64_t>(comps));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i <= n; ++i) eat(static_cast<std::uint64_t>(prof[v][i] + 2));
    return h;
}

inline bool mask_isomorphic(const MaskSpace& sp, std::uint32_t ma, std::uint32_t mb) {
    if (ma == mb) return true;
    const int n = sp.n;
    std::uint16_t aa[8], ab[8];
    sp.adjacency(ma, aa);
    sp.adjacency(mb, ab);
    int da[8], db[8];
    for (int v = 0; v < n; ++v) {
        da[v] = std::popcount(aa[v]);
        db[v] = std::popcount(ab[v]);
    }
    int img[8];
    std::uint16_t used = 0;
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            if (da[v] != db[w]) continue;
            bool ok = true;
            for (int p = 0; p < v && ok; ++p)
                if (((aa[v] >> p) & 1) != ((ab[w] >> img[p]) & 1)) ok = false;
            if (!ok) continue;
            img[v] = w;
            used |= std::uint16_t(1) << w;
            if (self(self, v + 1)) return true;
            used &= ~(std::uint16_t(1) << w);
        }
        return false;
    };
    return extend(extend, 0);
}

inline Graph mask_to_graph(const MaskSpace& sp, std::uint32_t mask) {
    GraphBuilder b(sp.n);
    while (mask) {
        const int bit = std::countr_zero(mask);
        b.edge(sp.bit_u[bit], sp.bit_v[bit]);
        mask &= mask - 1;
    }
    return b.build();
}

} // namespace detail

// Exact maximum of q over all order-n graphs missing some tree on 2k+2
// (resp. 2k+3) vertices. All 2^C(n,2) labeled graphs are scanned and reduced
// to isomorphism classes by invariant bucketing plus explicit isomorphism
// tests, then each class representative is evaluated once. Deterministic and
// independent of the worker count.
inline SearchReport exhaustive_search(int n, int k, bool prime, int workers = 1,
                                      double tol = 1e-10) {
    if (n < 2 || n > 7)
        throw std::invalid_argument("exhaustive_search: need 2 <= n <= 7 (use hill_climb above)");
    if (k < 1) throw std::invalid_argument("exhaustive_search: need k >= 1");
    const detail::MaskSpace sp(n);
    const std::uint32_t total = std::uint32_t(1) << sp.pairs;

    using Buckets = std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>;
    auto scan_range = [&](std::uint32_t lo, std::uint32_t hi) {
        Buckets local;
        for (std::uint32_t mask = lo; mask < hi; ++mask) {
            auto& reps = local[detail::mask_invariant(sp, mask)];
            bool known = false;
            for (std::uint32_t r : reps)
                if (detail::mask_isomorphic(sp, r, mask)) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(mask);
        }
        return local;
    };

    Buckets classes;
    if (workers <= 1) {
        classes = scan_range(0, total);
    } else {
        std::vector<Buckets> parts(workers);
        std::vector<std::thread> pool;
        const std::uint32_t chunk = total / workers + 1;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                const std::uint32_t lo = std::min<std::uint64_t>(std::uint64_t(w) * chunk, total);
                const std::uint32_t hi =
                    std::min<std::uint64_t>(std::uint64_t(w + 1) * chunk, total);
                parts[w] = scan_range(lo, hi);
            });
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& [key, reps] : part) {
                auto& global = classes[key];
                for (std::uint32_t m : reps) {
                    bool known = false;
                    for (std::uint32_t r : global)
                        if (detail::mask_isomorphic(sp, r, m)) {
                            known = true;
                            break;
                        }
                    if (!known) global.push_back(m);
                }
            }
    }

    std::vector<std::uint32_t> reps;
    for (auto& [key, v] : classes) reps.insert(reps.end(), v.begin(), v.end());
    std::sort(reps.begin(), reps.end());

    SearchReport rep;
    rep.mode = "exhaustive";
    rep.n = n;
    rep.k = k;
    rep.prime = prime;
    rep.labeled_graphs_scanned = total;
    rep.candidates_examined = static_cast<long long>(reps.size());
    rep.q_of_S = detail::q_of_construction(n, k, prime, tol);

    bool have = false;
    double best_q = 0.0;
    Graph best(1);
    std::string best_canon;
    for (std::uint32_t m : reps) {
        Graph g = detail::mask_to_graph(sp, m);
        if (!detail::in_class(g, k, prime)) continue;
        const double q = spectral_radius(g, tol).q;
        if (!have || q > best_q) {
            have = true;
            best_q = q;
            best = g;
            best_canon.clear();
        } else if (q == best_q) {
            if (best_canon.empty()) best_canon = canonical_graph6(best);
            std::string cand = canonical_graph6(g);
            if (cand < best_canon) {
                best = g;
                best_canon = std::move(cand);
            }
        }
    }
    if (!have) throw std::logic_error("exhaustive_search: empty class (unexpected)");
    rep.best_q = best_q;
    rep.best_graph = canonical_graph6(best);
    detail::certify(rep, best);
    return rep;
}

// Scans the family K_k joined with H, H carrying at most max_inner_edges
// edges (every distinct pattern up to isomorphism), keeps the members of the
// target class and reports the q-maximizer.
inline SearchReport family_scan(int n, int k, bool prime, int max_inner_edges,
                                double tol = 1e-10) {
    if (k < 1 || n <= k + 1) throw std::invalid_argument("family_scan: need n >= k+2, k >= 1");
    if (n > 60) throw std::invalid_argument("family_scan: need n <= 60");
    if (max_inner_edges < 0 || max_inner_edges > 3)
        throw std::invalid_argument("family_scan: need 0 <= max_inner_edges <= 3");

    // distinct inner-edge patterns without isolated vertices, support <= 2e
    std::vector<std::pair<std::string, Graph>> patterns;    // (canonical g6, pattern)
    patterns.emplace_back(canonical_graph6(Graph(1)), Graph(1));    // stands for the empty H
    for (int s = 2; s <= std::min(2 * max_inner_edges, n - k); ++s) {
        const detail::MaskSpace sp(s);
        for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << sp.pairs); ++mask) {
            if (std::popcount(mask) > max_inner_edges) continue;
            std::uint16_t adj[8];
            sp.adjacency(mask, adj);
            bool isolated = false;
            for (int v = 0; v < s && !isolated; ++v)
                if (adj[v] == 0) isolated = true;
            if (isolated) continue;
            Graph p = detail::mask_to_graph(sp, mask);
            std::string canon = canonical_graph6(p);
            bool seen = false;
            for (auto& [c, gr] : patterns)
                if (c == canon) {
                    seen = true;
                    break;
                }
            if (!seen) patterns.emplace_back(std::move(canon), std::move(p));
        }
    }
    std::sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) {
        if (a.second.edge_count() != b.second.edge_count())
            return a.second.edge_count() < b.second.edge_count();
        return a.first < b.first;
    });

    SearchReport rep;
    rep.mode = "family";
    rep.n = n;
    rep.k = k;
    rep.prime = prime;
    rep.candidates_examined = static_cast<long long>(patterns.size());
    rep.q_of_S = detail::q_of_construction(n, k, prime, tol);

    bool have = false;
    Graph best(1);
    for (auto& [canon, pat] : patterns) {
        GraphBuilder hb(n - k);
        if (pat.edge_count() > 0)
            for (int u = 0; u < pat.order(); ++u)
                for (int v : pat.neighbors(u))
                    if (u < v) hb.edge(u, v);
        const Graph g = join(make_complete(k), hb.build());
        FamilyCandidate c;
        c.pattern = canon;
        c.pattern_edges = static_cast<int>(pat.edge_count());
        c.member = detail::in_class(g, k, prime);
        if (c.member) {
            c.q = spectral_radius(g, tol).q;
            if (!have || c.q > rep.best_q ||
                (c.q == rep.best_q && graph6_encode(g) < rep.best_graph)) {
                have = true;
                rep.best_q = c.q;
                rep.best_graph = graph6_encode(g);
                best = g;
            }
        }
        rep.family_candidates.push_back(std::move(c));
    }
    if (!have) throw std::runtime_error("family_scan: no member of the class in this family");
    detail::certify(rep, best);
    return rep;
}

// Restarted stochastic hill climbing over single-edge toggles that keep the
// graph in the target class, accepting only strict q increases. Restart 0
// starts from the construction itself; later restarts from random graphs
// thinned until membership holds. Bit-reproducible for a fixed seed and any
// worker count.
inline SearchReport hill_climb(int n, int k, bool prime, std::uint64_t seed, int restarts,
                               int steps, int workers = 1, double tol = 1e-10,
                               std::vector<std::string>* trace = nullptr) {
    if (k < 1 || n <= k + 1) throw std::invalid_argument("hill_climb: need n >= k+2, k >= 1");
    if (n > 200) throw std::invalid_argument("hill_climb: need n <= 200");
    if (restarts < 1) throw std::invalid_argument("hill_climb: need restarts >= 1");
    const int t = detail::tree_order(k, prime);

    struct RestartOut {
        Graph g{1};
        double q = 0.0;
        std::string init;
        long long evaluated = 0;
        std::vector<std::string> rows;
    };
    std::vector<RestartOut> out(restarts);

    auto run_one = [&](int idx) {
        rnd::Engine rng(rnd::mix(seed, static_cast<std::uint64_t>(idx)));
        RestartOut res;
        Graph g(n);
        if (idx == 0) {
            g = prime ? make_S_plus(n, k) : make_S(n, k);
            res.init = "construction";
        } else {
            g = rnd::random_graph(rng, n, 0.5);
            res.init = "random-thinned";
        }
        MissingReport mem = contains_all_trees(g, t);
        while (mem.all_present) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v : g.neighbors(u))
                    if (u < v) edges.emplace_back(u, v);
            const auto [u, v] = edges[rnd::bounded(rng, static_cast<int>(edges.size()))];
            g = g.without_edge(u, v);
            mem = contains_all_trees(g, t);
        }
        CanonicalTree witness = *mem.first_missing;
        double q_cur = spectral_radius(g, tol).q;
        ++res.evaluated;

        for (int step = 0; step < steps; ++step) {
            const int a = rnd::bounded(rng, n);
            int b = rnd::bounded(rng, n - 1);
            if (b >= a) ++b;
            const int u = std::min(a, b), v = std::max(a, b);
            if (g.adjacent(u, v)) continue;    // removals never increase q
            Graph cand = g.with_edge(u, v);
            CanonicalTree new_witness = witness;
            if (contains_tree(cand, witness)) {
                const MissingReport m2 = contains_all_trees(cand, t);
                if (m2.all_present) continue;    // move would leave the class
                new_witness = *m2.first_missing;
            }
            ++res.evaluated;
            const double q_new = spectral_radius(cand, tol).q;
            if (q_new > q_cur) {
                if (trace)
                    res.rows.push_back(std::to_string(idx) + "," + std::to_string(step) +
                                       ",add," + std::to_string(u) + "," + std::to_string(v) +
                                       "," + fmt12(q_cur) + "," + fmt12(q_new));
                g = std::move(cand);
                q_cur = q_new;
                witness = std::move(new_witness);
            }
        }
        res.g = std::move(g);
        res.q = q_cur;
        out[idx] = std::move(res);
    };

    if (workers <= 1) {
        for (int i = 0; i < restarts; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min(workers, restarts); ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < restarts; i = next.fetch_add(1)) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    SearchReport rep;
    rep.mode = "hillclimb";
    rep.n = n;
    rep.k = k;
    rep.prime = prime;
    rep.seed = seed;
    rep.q_of_S = detail::q_of_construction(n, k, prime, tol);

    int best_idx = 0;
    std::string best_g6 = graph6_encode(out[0].g);
    for (int i = 1; i < restarts; ++i) {
        const std::string g6 = graph6_encode(out[i].g);
        if (out[i].q > out[best_idx].q || (out[i].q == out[best_idx].q && g6 < best_g6)) {
            best_idx = i;
            best_g6 = g6;
        }
    }
    for (int i = 0; i < restarts; ++i) {
        rep.restart_inits.push_back(out[i].init);
        rep.candidates_examined += out[i].evaluated;
        if (trace) trace->insert(trace->end(), out[i].rows.begin(), out[i].rows.end());
    }
    rep.best_q = out[best_idx].q;
    rep.best_graph = best_g6;
    detail::certify(rep, out[best_idx].g);

    const Graph target = prime ? make_S_plus(n, k) : make_S(n, k);
    rep.matches_construction = are_isomorphic(out[best_idx].g, target);
    if (!*rep.matches_construction)
        rep.note = "best graph is not isomorphic to the construction; flagged for inspection";
    return rep;
}

} // namespace slq
