#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "slq/containment.hpp"
#include "slq/randgraph.hpp"

using namespace slq;

TEST_CASE("single tree containment") {
    const CanonicalTree p6 = canonical_form(make_path(6));
    CHECK(!contains_tree(make_S(20, 2), p6).has_value());
    const CanonicalTree star5{{0, 1, 1, 1, 1, 1}};
    CHECK(contains_tree(make_S(10, 2), star5).has_value());
    for (const CanonicalTree& t : enumerate_trees(6))
        CHECK(contains_tree(make_complete_bipartite(3, 5), t).has_value());
    // larger tree than host: absent, not an error
    CHECK(!contains_tree(make_complete(3), canonical_form(make_path(4))).has_value());
}

TEST_CASE("returned embeddings verify") {
    rnd::Engine rng(31);
    for (int i = 0; i < 60; ++i) {
        const Graph host = rnd::random_graph(rng, 5 + rnd::bounded(rng, 10), 0.5);
        for (const CanonicalTree& t : enumerate_trees(2 + rnd::bounded(rng, 4))) {
            const auto emb = contains_tree(host, t);
            if (emb) REQUIRE(verify_embedding(host, t, *emb));
        }
    }
}

TEST_CASE("agrees with the brute-force injection oracle") {
    rnd::Engine rng(32);
    std::vector<std::vector<CanonicalTree>> pool;
    for (int t = 2; t <= 5; ++t) pool.push_back(enumerate_trees(t));
    int checked = 0;
    while (checked < 500) {
        const int n = 3 + rnd::bounded(rng, 6);
        const Graph host = rnd::random_graph(rng, n, 0.15 + 0.7 * rnd::unit(rng));
        const auto& trees = pool[rnd::bounded(rng, 4)];
        const CanonicalTree& t = trees[rnd::bounded(rng, static_cast<int>(trees.size()))];
        REQUIRE(contains_tree(host, t).has_value() == oracle::brute_force_contains(host, t));
        ++checked;
    }
}

TEST_CASE("containment is monotone under edge addition") {
    rnd::Engine rng(33);
    int done = 0;
    while (done < 50) {
        const int n = 6 + rnd::bounded(rng, 6);
        const Graph g = rnd::random_graph(rng, n, 0.3);
        if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) continue;
        int u, v;
        do {
            u = rnd::bounded(rng, n);
            v = rnd::bounded(rng, n);
        } while (u == v || g.adjacent(u, v));
        const Graph h = g.with_edge(u, v);
        for (const CanonicalTree& t : enumerate_trees(5))
            if (contains_tree(g, t)) REQUIRE(contains_tree(h, t).has_value());
        ++done;
    }
}

TEST_CASE("all-trees report") {
    const MissingReport m = contains_all_trees(make_S(30, 2), 6);
    CHECK(!m.all_present);
    REQUIRE(m.first_missing.has_value());
    CHECK(*m.first_missing == canonical_form(make_path(6)));
    CHECK(m.checked == 1);    // the path is the first tree emitted

    CHECK(contains_all_trees(make_S_plus(30, 2), 6).all_present);
    CHECK(contains_all_trees(make_lemma24_graph(2, Lemma24Variant::plus), 6).all_present);

    // vacuous misses when t exceeds the host order
    const MissingReport v = contains_all_trees(make_complete(5), 6);
    CHECK(!v.all_present);
    CHECK(*v.first_missing == canonical_form(make_path(6)));

    CHECK_THROWS_AS(contains_all_trees(make_complete(5), 1), std::invalid_argument);
}

TEST_CASE("bipartite hosts are tree-universal") {
    for (int t = 2; t <= 8; ++t) {
        INFO("t = " << t);
        CHECK(verify_bipartite_lemma(t));
    }
    CHECK_THROWS_AS(verify_bipartite_lemma(1), std::invalid_argument);
    CHECK_THROWS_AS(verify_bipartite_lemma(11), std::invalid_argument);
}

TEST_CASE("joined constructions are tree-universal") {
    CHECK(verify_constructions_lemma(1));
    CHECK(verify_constructions_lemma(2));
    CHECK_THROWS_AS(verify_constructions_lemma(5), std::invalid_argument);
}

TEST_CASE("edge bound obligation") {
    const AuditEntry dense = edge_bound_audit(make_complete(10), 2, false);
    CHECK(dense.hypothesis_met);    // 45 > 40
    CHECK(dense.holds);
    CHECK(dense.slack == 5.0);

    const AuditEntry sparse = edge_bound_audit(make_S(20, 2), 2, false);
    CHECK(!sparse.hypothesis_met);    // 37 <= 80
    CHECK(sparse.holds);
    CHECK(sparse.slack == 37.0 - 80.0);

    rnd::Engine rng(34);
    for (int i = 0; i < 30; ++i) {
        const int n = 10 + rnd::bounded(rng, 6);
        const long long cap = static_cast<long long>(n) * (n - 1) / 2;
        const long long e = 4 * n + 1 + rnd::bounded(rng, static_cast<int>(cap - 4 * n));
        const AuditEntry entry =
            edge_bound_audit(rnd::random_graph_with_edges(rng, n, e), 2, false);
        REQUIRE(entry.hypothesis_met);
        REQUIRE(entry.holds);
    }
}
