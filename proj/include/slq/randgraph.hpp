#pragma once

#include <cstdint>
#include <random>

#include "slq/graph.hpp"

namespace slq::rnd {

using Engine = std::mt19937_64;

// splitmix64 step; used to derive independent per-stream seeds.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Draws below m by modulo; bias is irrelevant at these ranges and the result
// does not depend on the standard library's distribution implementations.
inline int bounded(Engine& e, int m) { return static_cast<int>(e() % static_cast<std::uint64_t>(m)); }

inline double unit(Engine& e) { return static_cast<double>(e() >> 11) * 0x1.0p-53; }

inline Graph random_graph(Engine& e, int n, double p) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(e) < p) b.edge(u, v);
    return b.build();
}

inline Graph random_connected_graph(Engine& e, int n, double p, int max_tries = 1000) {
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph(e, n, p);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: give up after max_tries");
}

// Exactly m edges, chosen as a seeded shuffle prefix of all vertex pairs.
inline Graph random_graph_with_edges(Engine& e, int n, long long m) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (m < 0 || m > static_cast<long long>(pairs.size()))
        throw std::invalid_argument("random_graph_with_edges: bad edge count");
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[bounded(e, static_cast<int>(i))]);
    GraphBuilder b(n);
    for (long long i = 0; i < m; ++i) b.edge(pairs[i].first, pairs[i].second);
    return b.build();
}

} // namespace slq::rnd
