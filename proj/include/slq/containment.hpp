#pragma once

#include <numeric>
#include <optional>

#include "slq/graph.hpp"
#include "slq/report.hpp"
#include "slq/trees.hpp"

namespace slq {

// Injective map from tree vertices to host vertices carrying every tree edge.
struct Embedding {
    std::vector<int> map;
};

inline bool verify_embedding(const Graph& host, const CanonicalTree& tree, const Embedding& e) {
    const int t = tree.order();
    if (static_cast<int>(e.map.size()) != t) return false;
    std::vector<char> used(host.order(), 0);
    for (int img : e.map) {
        if (img < 0 || img >= host.order() || used[img]) return false;
        used[img] = 1;
    }
    const Graph tg = tree_to_graph(tree);
    for (int v = 0; v < t; ++v)
        for (int u : tg.neighbors(v))
            if (u > v && !host.adjacent(e.map[v], e.map[u])) return false;
    return true;
}

// Backtracking subtree embedding. Tree vertices are placed in DFS order from
// a maximum-degree tree vertex; host candidates are the neighbors of the
// parent's image, filtered by degree and tried in descending host degree.
// A tree larger than the host is simply absent, not an error.
inline std::optional<Embedding> contains_tree(const Graph& host, const CanonicalTree& tree) {
    const int n = host.order();
    const int t = tree.order();
    if (t > n) return std::nullopt;

    const Graph tg = tree_to_graph(tree);
    int root = 0;
    for (int v = 1; v < t; ++v)
        if (tg.degree(v) > tg.degree(root)) root = v;

    std::vector<int> order, parent(t, -1);
    order.reserve(t);
    {
        std::vector<int> stack{root};
        std::vector<char> seen(t, 0);
        seen[root] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int u : tg.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    parent[u] = v;
                    stack.push_back(u);
                }
        }
    }

    auto by_degree_desc = [&host](int a, int b) {
        return host.degree(a) != host.degree(b) ? host.degree(a) > host.degree(b) : a < b;
    };
    std::vector<int> root_candidates(n);
    std::iota(root_candidates.begin(), root_candidates.end(), 0);
    std::sort(root_candidates.begin(), root_candidates.end(), by_degree_desc);
    std::vector<std::vector<int>> sorted_nb(n);
    for (int v = 0; v < n; ++v) {
        auto nb = host.neighbors(v);
        sorted_nb[v].assign(nb.begin(), nb.end());
        std::sort(sorted_nb[v].begin(), sorted_nb[v].end(), by_degree_desc);
    }

    std::vector<int> img(t, -1);
    std::vector<char> used(n, 0);

    auto place = [&](auto&& self, int pos) -> bool {
        if (pos == t) return true;
        const int tv = order[pos];
        const int need = tg.degree(tv);
        const std::vector<int>& cands =
            pos == 0 ? root_candidates : sorted_nb[img[parent[tv]]];
        for (int hv : cands) {
            if (host.degree(hv) < need) break;    // descending order: no candidate left
            if (used[hv]) continue;
            img[tv] = hv;
            used[hv] = 1;
            if (self(self, pos + 1)) return true;
            used[hv] = 0;
            img[tv] = -1;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;

    Embedding e{img};
    if (!verify_embedding(host, tree, e))
        throw std::logic_error("contains_tree: produced embedding failed verification");
    return e;
}

// Outcome of checking a host against every tree on t vertices, stopping at
// the first (earliest in enumeration order) missing one.
struct MissingReport {
    int t = 0;
    bool all_present = false;
    std::optional<CanonicalTree> first_missing;
    long checked = 0;
};

inline MissingReport contains_all_trees(const Graph& host, int t) {
    if (t < 2) throw std::invalid_argument("contains_all_trees: need t >= 2");
    MissingReport rep;
    rep.t = t;
    TreeStream stream(t);
    while (auto tree = stream.next()) {
        ++rep.checked;
        if (!contains_tree(host, *tree)) {
            rep.first_missing = std::move(*tree);
            return rep;
        }
    }
    rep.all_present = true;
    return rep;
}

// K_{floor(t/2), t-1} holds every tree on t vertices; checked exhaustively.
inline bool verify_bipartite_lemma(int t) {
    if (t < 2 || t > 10) throw std::invalid_argument("verify_bipartite_lemma: need 2 <= t <= 10");
    return contains_all_trees(make_complete_bipartite(t / 2, t - 1), t).all_present;
}

// The three joined constructions are tree-universal at their target orders.
inline bool verify_constructions_lemma(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("verify_constructions_lemma: need 1 <= k <= 4");
    return contains_all_trees(make_lemma24_graph(k, Lemma24Variant::plus), 2 * k + 2).all_present &&
           contains_all_trees(make_lemma24_graph(k, Lemma24Variant::p), 2 * k + 3).all_present &&
           contains_all_trees(make_lemma24_graph(k, Lemma24Variant::m), 2 * k + 3).all_present;
}

// Contrapositive of the edge bound: a graph with more than 2kn edges (or
// (2k+1)n for the prime case) must contain every tree on 2k+2 (resp. 2k+3)
// vertices. slack here is the premise excess e(G) - bound.
inline AuditEntry edge_bound_audit(const Graph& g, int k, bool prime) {
    AuditEntry e;
    e.id = "edge-count-obligation";
    const long long bound = static_cast<long long>(prime ? 2 * k + 1 : 2 * k) * g.order();
    const long long edges = g.edge_count();
    e.slack = static_cast<double>(edges - bound);
    e.hypothesis_met = edges > bound;
    if (!e.hypothesis_met) {
        e.holds = true;
        e.note = "no obligation: e(G) <= bound";
        return e;
    }
    const MissingReport rep = contains_all_trees(g, prime ? 2 * k + 3 : 2 * k + 2);
    e.holds = rep.all_present;
    e.note = e.holds ? "obligated and satisfied"
                     : "VIOLATION: missing tree " + level_sequence_string(*rep.first_missing);
    return e;
}

} // namespace slq
