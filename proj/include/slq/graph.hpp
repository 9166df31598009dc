#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slq {

// Undirected simple graph on vertices 0..n-1. Immutable after construction:
// edge edits return new graphs, so values can be shared freely across workers.
// Storage is a symmetric bit matrix plus a CSR neighbor table for iteration.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64) {
        if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        deg_.assign(n_, 0);
        finalize();
    }

    int order() const noexcept { return n_; }
    long long edge_count() const noexcept { return edges_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return deg_[v];
    }
    const std::vector<int>& degrees() const noexcept { return deg_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {csr_.data() + off_[v], csr_.data() + off_[v + 1]};
    }

    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.set_edge(u, v, true);
        g.finalize();
        return g;
    }
    Graph without_edge(int u, int v) const {
        Graph g = *this;
        g.set_edge(u, v, false);
        g.finalize();
        return g;
    }
    Graph with_edge_toggled(int u, int v) const {
        return adjacent(u, v) ? without_edge(u, v) : with_edge(u, v);
    }

    bool operator==(const Graph& o) const noexcept { return n_ == o.n_ && bits_ == o.bits_; }

private:
    friend class GraphBuilder;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n_ - 1));
    }

    void set_edge(int u, int v, bool on) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        const bool had = (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
        if (had == on) return;
        const std::uint64_t mu = std::uint64_t{1} << (v & 63);
        const std::uint64_t mv = std::uint64_t{1} << (u & 63);
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] ^= mu;
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] ^= mv;
        deg_[u] += on ? 1 : -1;
        deg_[v] += on ? 1 : -1;
        edges_ += on ? 1 : -1;
    }

    void finalize() {
        off_.assign(n_ + 1, 0);
        for (int v = 0; v < n_; ++v) off_[v + 1] = off_[v] + deg_[v];
        csr_.resize(off_[n_]);
        std::vector<int> cursor(off_.begin(), off_.end() - 1);
        for (int v = 0; v < n_; ++v) {
            const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(v) * words_;
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = r[w];
                while (word) {
                    const int b = std::countr_zero(word);
                    csr_[cursor[v]++] = (w << 6) | b;
                    word &= word - 1;
                }
            }
        }
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
    std::vector<int> off_;
    std::vector<int> csr_;
    long long edges_ = 0;
};

// Accumulates edges, then hands out the finished immutable graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    GraphBuilder& edge(int u, int v) {
        g_.set_edge(u, v, true);
        return *this;
    }
    Graph build() {
        g_.finalize();
        return std::move(g_);
    }

private:
    Graph g_;
};

// Subset of a graph's vertex range; members kept sorted.
struct VertexSet {
    int universe = 0;
    std::vector<int> members;

    int size() const noexcept { return static_cast<int>(members.size()); }
    bool contains(int v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
};

inline Graph make_empty(int n) { return Graph(n); }

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: need n >= 1");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.edge(u, v);
    return b.build();
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.edge(v, v + 1);
    return b.build();
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.edge(v, (v + 1) % n);
    return b.build();
}

// G on the low indices, H shifted above it, every cross pair joined.
inline Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    GraphBuilder b(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v : g.neighbors(u))
            if (u < v) b.edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v : h.neighbors(u))
            if (u < v) b.edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) b.edge(u, ng + v);
    return b.build();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    GraphBuilder b(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v : g.neighbors(u))
            if (u < v) b.edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v : h.neighbors(u))
            if (u < v) b.edge(ng + u, ng + v);
    return b.build();
}

inline Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.edge(u, v);
    return b.build();
}

// Clique on vertices 0..k-1 joined to an independent set on k..n-1.
inline Graph make_S(int n, int k) {
    if (k < 1 || n <= k) throw std::invalid_argument("make_S: need n > k >= 1");
    GraphBuilder b(n);
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) b.edge(u, v);
        for (int v = k; v < n; ++v) b.edge(u, v);
    }
    return b.build();
}

// make_S plus the one extra edge {k, k+1} inside the independent part.
inline Graph make_S_plus(int n, int k) {
    if (k < 1 || n < k + 2) throw std::invalid_argument("make_S_plus: need n >= k+2, k >= 1");
    return make_S(n, k).with_edge(k, k + 1);
}

inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: need a,b >= 1");
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.edge(u, a + v);
    return g.build();
}

enum class Lemma24Variant { plus, p, m };

// The three tree-universal hosts: an independent k-set joined to
// (2k-1)K_1 u K_2, (2k-1)K_1 u P_3 or (2k-2)K_1 u 2K_2 respectively.
inline Graph make_lemma24_graph(int k, Lemma24Variant variant) {
    if (k < 1) throw std::invalid_argument("make_lemma24_graph: need k >= 1");
    Graph left = make_empty(k);
    switch (variant) {
        case Lemma24Variant::plus:
            return join(left, disjoint_union(make_empty(2 * k - 1), make_complete(2)));
        case Lemma24Variant::p:
            return join(left, disjoint_union(make_empty(2 * k - 1), make_path(3)));
        case Lemma24Variant::m:
            if (k == 1) return join(left, disjoint_union(make_complete(2), make_complete(2)));
            return join(left, disjoint_union(make_empty(2 * k - 2),
                                             disjoint_union(make_complete(2), make_complete(2))));
    }
    throw std::invalid_argument("make_lemma24_graph: unknown variant");
}

inline bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

} // namespace slq
