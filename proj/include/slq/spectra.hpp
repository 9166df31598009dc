#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "slq/graph.hpp"

namespace slq {

// Largest eigenvalue of Q(G) = D(G) + A(G) with its Perron vector, computed
// matrix-free by power iteration with a Rayleigh-quotient estimate.
struct SpectralResult {
    double q = 0.0;
    std::vector<double> x;    // nonnegative, max component exactly 1
    double residual = 0.0;    // max-norm of Qx - qx at the reported iterate
    long iterations = 0;
    bool converged = false;
    int max_index = 0;        // first index attaining the max component
    double tol = 0.0;
};

// y_v = d_v x_v + sum over neighbors of x_u; Q is never materialized.
inline std::vector<double> q_apply(const Graph& g, std::span<const double> x) {
    const int n = g.order();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("q_apply: vector length " + std::to_string(x.size()) +
                                    " does not match order " + std::to_string(n));
    std::vector<double> y(n);
    for (int v = 0; v < n; ++v) {
        double s = g.degree(v) * x[v];
        for (int u : g.neighbors(v)) s += x[u];
        y[v] = s;
    }
    return y;
}

// Power iteration on Q from the all-ones vector (strictly positive, so every
// component of a reducible Q is hit and the max over components is found).
// The Rayleigh quotient rises monotonically to q; iteration stops once the
// residual max-norm is within tol, which brackets the true eigenvalue in
// [q, q + residual-derived gap]. Non-convergence is reported, never hidden.
inline SpectralResult spectral_radius(const Graph& g, double tol = 1e-10,
                                      long max_iterations = 1000000) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    const int n = g.order();
    SpectralResult r;
    r.tol = tol;
    r.x.assign(n, 1.0);
    for (long it = 0; it <= max_iterations; ++it) {
        const std::vector<double> y = q_apply(g, r.x);
        double num = 0.0, den = 0.0;
        for (int v = 0; v < n; ++v) {
            num += r.x[v] * y[v];
            den += r.x[v] * r.x[v];
        }
        const double rho = num / den;
        double res = 0.0;
        for (int v = 0; v < n; ++v) res = std::max(res, std::abs(y[v] - rho * r.x[v]));
        r.q = rho;
        r.residual = res;
        r.iterations = it;
        if (res <= tol) {
            r.converged = true;
            break;
        }
        if (it == max_iterations) break;
        double m = 0.0;
        for (double v : y) m = std::max(m, v);
        for (int v = 0; v < n; ++v) r.x[v] = y[v] / m;
    }
    double m = 0.0;
    for (int v = 0; v < n; ++v)
        if (r.x[v] > m) {
            m = r.x[v];
            r.max_index = v;
        }
    for (double& v : r.x) v /= m;
    return r;
}

// q(S_{n,k}) in closed form: (n+2k-2 + sqrt((n+2k-2)^2 - 8(k^2-k))) / 2.
inline double q_S_closed(long long n, long long k) {
    if (k < 1 || n <= k) throw std::invalid_argument("q_S_closed: need n > k >= 1");
    const double a = static_cast<double>(n + 2 * k - 2);
    const double d = a * a - 8.0 * static_cast<double>(k * k - k);
    return (a + std::sqrt(d)) / 2.0;
}

namespace detail {
// Characteristic cubic of the equitable quotient of Q(S+_{n,k}) for n > k+2;
// its largest root is q(S+_{n,k}).
inline double s_plus_cubic(long long n, long long k, double z) {
    const double b = static_cast<double>(n + 3 * k);
    const double c = static_cast<double>((k + 2) * n + 4 * k * k - 4);
    const double d = static_cast<double>(2 * k * k * (k + 1));
    return ((z - b) * z + c) * z - d;
}
} // namespace detail

// q(S+_{n,k}): 2k+2 exactly when n = k+2 (the graph is complete); otherwise
// the largest root of the quotient cubic, bisected on [q(S_{n,k}), n+2k-2] —
// a valid bracket by the bound chain — to 1e-12 relative width.
inline double q_S_plus_closed(long long n, long long k) {
    if (k < 2 || n < k + 2)
        throw std::invalid_argument("q_S_plus_closed: need n >= k+2, k >= 2");
    if (n == k + 2) return static_cast<double>(2 * k + 2);
    double lo = q_S_closed(n, k);
    double hi = static_cast<double>(n + 2 * k - 2);
    if (!(detail::s_plus_cubic(n, k, lo) < 0.0 && detail::s_plus_cubic(n, k, hi) > 0.0))
        throw std::logic_error("q_S_plus_closed: bracket sign check failed (internal bug)");
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (detail::s_plus_cubic(n, k, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct BoundReport {
    double lower = 0.0;    // n + 2k - 2 - 2k^2/n
    double q_S = 0.0;
    double q_S_plus = 0.0;
    double upper = 0.0;    // n + 2k - 2
    bool chain_holds = false;
};

// lower < q(S_{n,k}) < q(S+_{n,k}) < upper. Attained with equality on the
// right at (k,n) = (2,4), where S+_{4,2} = K_4 — chain_holds is false there.
inline BoundReport bound_chain(long long n, long long k) {
    if (k < 2 || n < k + 2) throw std::invalid_argument("bound_chain: need n >= k+2, k >= 2");
    BoundReport r;
    r.upper = static_cast<double>(n + 2 * k - 2);
    r.lower = r.upper - 2.0 * static_cast<double>(k * k) / static_cast<double>(n);
    r.q_S = q_S_closed(n, k);
    r.q_S_plus = q_S_plus_closed(n, k);
    r.chain_holds = r.lower < r.q_S && r.q_S < r.q_S_plus && r.q_S_plus < r.upper;
    return r;
}

// Max over v of |q^2 x_v - (Q^2 x)_v|; the right side expands to
// d_v^2 x_v + d_v sum x_u + sum d_u x_u + double neighbor sum.
inline double perron_identity_residual(const Graph& g, const SpectralResult& r) {
    const int n = g.order();
    if (static_cast<int>(r.x.size()) != n)
        throw std::invalid_argument("perron_identity_residual: result does not match graph");
    const std::vector<double> y = q_apply(g, r.x);
    const std::vector<double> z = q_apply(g, y);
    double worst = 0.0;
    for (int v = 0; v < n; ++v) worst = std::max(worst, std::abs(r.q * r.q * r.x[v] - z[v]));
    return worst;
}

} // namespace slq
