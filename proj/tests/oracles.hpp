#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they cross-check.

#include <Eigen/Dense>

#include "slq/graph.hpp"
#include "slq/trees.hpp"

namespace oracle {

// Dense symmetric eigensolver route to the largest eigenvalue of Q(G).
inline double dense_q(const slq::Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        Q(v, v) = g.degree(v);
        for (int u : g.neighbors(v)) Q(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
    return es.eigenvalues()(n - 1);
}

// Containment by raw enumeration of every injection, edges checked last.
inline bool brute_force_contains(const slq::Graph& host, const slq::CanonicalTree& tree) {
    const int n = host.order();
    const int t = tree.order();
    if (t > n) return false;
    const slq::Graph tg = slq::tree_to_graph(tree);
    std::vector<int> img(t, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == t) {
            for (int a = 0; a < t; ++a)
                for (int b : tg.neighbors(a))
                    if (a < b && !host.adjacent(img[a], img[b])) return false;
            return true;
        }
        for (int h = 0; h < n; ++h) {
            if (used[h]) continue;
            img[pos] = h;
            used[h] = 1;
            if (self(self, pos + 1)) return true;
            used[h] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace oracle
