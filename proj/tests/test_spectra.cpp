#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "slq/randgraph.hpp"
#include "slq/spectra.hpp"
#include "slq/verify.hpp"

using namespace slq;

TEST_CASE("q_apply") {
    const std::vector<double> ones2{1, 1};
    CHECK(q_apply(make_complete(2), ones2) == std::vector<double>{2, 2});
    const std::vector<double> v3{0.3, -1.0, 2.0};
    CHECK(q_apply(make_empty(3), v3) == std::vector<double>{0, 0, 0});
    const std::vector<double> ones3{1, 1, 1};
    CHECK(q_apply(make_path(3), ones3) == std::vector<double>{2, 4, 2});
    CHECK_THROWS_AS(q_apply(make_path(3), ones2), std::invalid_argument);
}

TEST_CASE("spectral radius basics") {
    CHECK(spectral_radius(make_complete(2)).q == Catch::Approx(2.0).margin(1e-12));
    for (int n = 1; n <= 10; ++n)
        CHECK(spectral_radius(make_complete(n)).q ==
              Catch::Approx(2.0 * n - 2.0).margin(1e-10));
    CHECK(spectral_radius(make_empty(6)).q == 0.0);

    const SpectralResult r = spectral_radius(make_S(10, 2));
    CHECK(r.converged);
    CHECK(r.residual <= r.tol);
    CHECK(r.q == Catch::Approx(6.0 + 4.0 * std::sqrt(2.0)).margin(1e-9));
    double mx = 0.0;
    for (double x : r.x) {
        CHECK(x >= 0.0);
        mx = std::max(mx, x);
    }
    CHECK(mx == 1.0);

    // disconnected: the max over components, found from the all-ones start
    const Graph two = disjoint_union(make_complete(3), make_complete(5));
    CHECK(spectral_radius(two).q == Catch::Approx(8.0).margin(1e-9));

    CHECK_THROWS_AS(spectral_radius(make_complete(3), 0.0), std::invalid_argument);
}

TEST_CASE("spectral radius agrees with a dense eigensolver") {
    for (const auto& [name, g] : constructor_corpus()) {
        INFO(name);
        const SpectralResult r = spectral_radius(g);
        REQUIRE(r.converged);
        REQUIRE(std::abs(r.q - oracle::dense_q(g)) <= 1e-8 * std::max(1.0, r.q));
    }
    rnd::Engine rng(21);
    for (int i = 0; i < 100; ++i) {
        const Graph g = rnd::random_graph(rng, 2 + rnd::bounded(rng, 39), 0.1 + 0.8 * rnd::unit(rng));
        const SpectralResult r = spectral_radius(g);
        REQUIRE(r.converged);
        REQUIRE(std::abs(r.q - oracle::dense_q(g)) <= 1e-8 * std::max(1.0, r.q));
    }
}

TEST_CASE("closed form for S") {
    CHECK(q_S_closed(10, 2) == Catch::Approx(6.0 + 4.0 * std::sqrt(2.0)).margin(1e-12));
    CHECK(q_S_closed(4, 1) == Catch::Approx(4.0).margin(1e-12));
    CHECK(q_S_closed(6, 5) == Catch::Approx(10.0).margin(1e-12));
    CHECK_THROWS_AS(q_S_closed(5, 5), std::invalid_argument);
}

TEST_CASE("closed form for S+") {
    CHECK(q_S_plus_closed(4, 2) == 6.0);
    const double q = q_S_plus_closed(10, 2);
    CHECK(q > 11.6568);
    CHECK(q < 12.0);
    CHECK(std::abs(q - spectral_radius(make_S_plus(10, 2)).q) <= 1e-9);
    CHECK(std::abs(q - oracle::dense_q(make_S_plus(10, 2))) <= 1e-9);
    CHECK_THROWS_AS(q_S_plus_closed(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_S_plus_closed(3, 2), std::invalid_argument);

    // strictly below n+2k-2 everywhere except the (k,n)=(2,4) corner, where
    // S+_{4,2} = K_4 attains the bound exactly
    for (int k = 2; k <= 6; ++k)
        for (int n = k + 2; n <= 80; ++n) {
            const double v = q_S_plus_closed(n, k);
            if (k == 2 && n == 4)
                REQUIRE(v == static_cast<double>(n + 2 * k - 2));
            else
                REQUIRE(v < n + 2 * k - 2);
        }
}

TEST_CASE("bound chain") {
    const BoundReport b = bound_chain(10, 2);
    CHECK(b.lower == Catch::Approx(11.2).margin(1e-12));
    CHECK(b.q_S == Catch::Approx(11.65685424949238).margin(1e-10));
    CHECK(b.upper == 12.0);
    CHECK(b.chain_holds);
    CHECK(bound_chain(100, 3).chain_holds);
    const BoundReport c = bound_chain(6, 4);
    CHECK(c.q_S_plus == 10.0);
    CHECK(c.upper == 12.0);
    CHECK(c.chain_holds);
    // the known corner: upper bound attained, so the strict chain fails there
    CHECK(!bound_chain(4, 2).chain_holds);
    CHECK_THROWS_AS(bound_chain(10, 1), std::invalid_argument);
}

TEST_CASE("eigenvalue identity residual") {
    // exact eigenpair of K_4
    SpectralResult exact;
    exact.q = 6.0;
    exact.x = {1, 1, 1, 1};
    exact.converged = true;
    exact.tol = 1e-10;
    CHECK(perron_identity_residual(make_complete(4), exact) <= 1e-12);

    const Graph s = make_S(30, 2);
    const SpectralResult r = spectral_radius(s, 1e-12);
    REQUIRE(r.converged);
    CHECK(perron_identity_residual(s, r) <= 1e-6 * r.q * r.q);

    // residual tracks the convergence tolerance
    rnd::Engine rng(22);
    const Graph g = rnd::random_connected_graph(rng, 50, 0.2);
    const double loose = perron_identity_residual(g, spectral_radius(g, 1e-6));
    const double tight = perron_identity_residual(g, spectral_radius(g, 1e-10));
    CHECK(tight < loose);
}

TEST_CASE("adding an edge strictly increases q on connected graphs") {
    rnd::Engine rng(23);
    int done = 0;
    while (done < 100) {
        const int n = 4 + rnd::bounded(rng, 27);
        const Graph g = rnd::random_connected_graph(rng, n, 0.3);
        if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) continue;
        int u = -1, v = -1;
        do {
            u = rnd::bounded(rng, n);
            v = rnd::bounded(rng, n);
        } while (u == v || g.adjacent(u, v));
        const SpectralResult before = spectral_radius(g);
        const SpectralResult after = spectral_radius(g.with_edge(u, v));
        REQUIRE(after.q - before.q > before.residual + after.residual);
        ++done;
    }
}

TEST_CASE("q range and completeness characterization") {
    rnd::Engine rng(24);
    for (int i = 0; i < 80; ++i) {
        const int n = 2 + rnd::bounded(rng, 9);
        const Graph g = rnd::random_graph(rng, n, rnd::unit(rng));
        const double q = spectral_radius(g).q;
        REQUIRE(q >= 0.0);
        REQUIRE(q <= 2.0 * (n - 1) + 1e-9);
        const bool complete = g.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
        if (complete)
            REQUIRE(q == Catch::Approx(2.0 * (n - 1)).margin(1e-9));
        else
            REQUIRE(q < 2.0 * (n - 1) - 1e-6);
    }
}
