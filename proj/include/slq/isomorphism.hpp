#pragma once

#include <array>
#include <numeric>

#include "slq/graph.hpp"
#include "slq/graph6.hpp"

namespace slq {

namespace detail {

// Iso-invariant vertex signature: degree plus sorted neighbor degrees.
inline std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        sig[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
}

} // namespace detail

// Backtracking isomorphism test with signature pruning; exact.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    const auto sa = detail::vertex_signatures(a);
    const auto sb = detail::vertex_signatures(b);
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    // Map a's vertices in order of rarest signature first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> freq(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (sa[v] == sa[u]) ++freq[v];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (freq[x] != freq[y]) return freq[x] < freq[y];
        return x < y;
    });
    std::vector<int> img(n, -1), used(n, 0);
    auto extend = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        const int v = order[pos];
        for (int w = 0; w < n; ++w) {
            if (used[w] || sa[v] != sb[w]) continue;
            bool ok = true;
            for (int p = 0; p < pos && ok; ++p) {
                const int v2 = order[p];
                if (a.adjacent(v, v2) != b.adjacent(w, img[v2])) ok = false;
            }
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            if (self(self, pos + 1)) return true;
            used[w] = 0;
            img[v] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

// Canonical relabeling for small graphs: vertices are blocked by sorted
// signature class (an iso-invariant refinement, so the block structure is the
// same for isomorphic inputs), and the permutation giving the smallest
// upper-triangle bitstring within those blocks is taken. Equal outputs mean
// isomorphic inputs.
inline Graph canonical_relabel(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_relabel: supported for n <= 8");
    const auto sig = detail::vertex_signatures(g);

    std::vector<std::vector<int>> classes_sorted;
    for (int v = 0; v < n; ++v) classes_sorted.push_back(sig[v]);
    std::sort(classes_sorted.begin(), classes_sorted.end());
    classes_sorted.erase(std::unique(classes_sorted.begin(), classes_sorted.end()),
                         classes_sorted.end());
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v)
        cls[v] = static_cast<int>(std::lower_bound(classes_sorted.begin(), classes_sorted.end(),
                                                   sig[v]) -
                                  classes_sorted.begin());
    // position p must hold a vertex of pos_class[p]
    std::vector<int> pos_class;
    for (int c = 0; c < static_cast<int>(classes_sorted.size()); ++c)
        for (int v = 0; v < n; ++v)
            if (cls[v] == c) pos_class.push_back(c);

    std::vector<int> best, cur(n, -1);
    std::vector<char> best_bits, used(n, 0);
    auto bits_for = [&](const std::vector<int>& perm) {
        std::vector<char> bits;
        bits.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits.push_back(g.adjacent(perm[i], perm[j]) ? 1 : 0);
        return bits;
    };
    auto search = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            auto bits = bits_for(cur);
            if (best.empty() || bits < best_bits) {
                best = cur;
                best_bits = std::move(bits);
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || cls[v] != pos_class[pos]) continue;
            cur[pos] = v;
            used[v] = 1;
            self(self, pos + 1);
            used[v] = 0;
            cur[pos] = -1;
        }
    };
    search(search, 0);

    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(best[i], best[j])) b.edge(i, j);
    return b.build();
}

inline std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_relabel(g)); }

} // namespace slq
