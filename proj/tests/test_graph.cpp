#include <catch2/catch_amalgamated.hpp>

#include "slq/graph.hpp"
#include "slq/graph6.hpp"
#include "slq/isomorphism.hpp"
#include "slq/randgraph.hpp"

using namespace slq;

TEST_CASE("complete graphs") {
    CHECK(make_complete(1).edge_count() == 0);
    CHECK(make_complete(4).edge_count() == 6);
    CHECK(make_complete(10).edge_count() == 45);
    CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
}

TEST_CASE("join") {
    const Graph a = join(make_complete(2), make_empty(2));
    CHECK(a.order() == 4);
    CHECK(a.edge_count() == 5);
    CHECK(join(make_empty(1), make_empty(1)) == make_complete(2));
    // K_k v empty is exactly make_S, same labels
    CHECK(join(make_complete(3), make_empty(9)) == make_S(12, 3));

    rnd::Engine rng(11);
    for (int i = 0; i < 100; ++i) {
        const int ng = 1 + rnd::bounded(rng, 12), nh = 1 + rnd::bounded(rng, 12);
        const Graph g = rnd::random_graph(rng, ng, rnd::unit(rng));
        const Graph h = rnd::random_graph(rng, nh, rnd::unit(rng));
        const Graph j = join(g, h);
        REQUIRE(j.order() == ng + nh);
        REQUIRE(j.edge_count() ==
                g.edge_count() + h.edge_count() + static_cast<long long>(ng) * nh);
        // induced subgraphs on the two sides are the operands
        for (int u = 0; u < ng; ++u)
            for (int v = u + 1; v < ng; ++v) REQUIRE(j.adjacent(u, v) == g.adjacent(u, v));
        for (int u = 0; u < nh; ++u)
            for (int v = u + 1; v < nh; ++v)
                REQUIRE(j.adjacent(ng + u, ng + v) == h.adjacent(u, v));
    }
}

TEST_CASE("disjoint union") {
    const Graph a = disjoint_union(make_empty(3), make_complete(2));
    CHECK(a.order() == 5);
    CHECK(a.edge_count() == 1);
    CHECK(disjoint_union(make_complete(2), make_complete(2)).edge_count() == 2);
    const Graph b = disjoint_union(make_path(3), make_empty(2));
    CHECK(b.order() == 5);
    CHECK(b.edge_count() == 2);
}

TEST_CASE("complement") {
    CHECK(complement(make_complete(4)) == make_empty(4));
    CHECK(complement(make_empty(7)) == make_complete(7));
    CHECK(are_isomorphic(complement(make_cycle(5)), make_cycle(5)));

    rnd::Engine rng(12);
    for (int i = 0; i < 100; ++i) {
        const Graph g = rnd::random_graph(rng, 1 + rnd::bounded(rng, 14), rnd::unit(rng));
        const long long n = g.order();
        CHECK(complement(g).edge_count() == n * (n - 1) / 2 - g.edge_count());
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("S and S+ constructions") {
    CHECK(make_S(10, 2).edge_count() == 17);
    CHECK(are_isomorphic(make_S(4, 1), make_complete_bipartite(1, 3)));
    CHECK(make_S(20, 2).edge_count() == 37);
    CHECK_THROWS_AS(make_S(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_S(4, 0), std::invalid_argument);

    // fixed layout: clique occupies the lowest indices
    const Graph s = make_S(8, 3);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 8; ++v) REQUIRE(s.adjacent(u, v));
    for (int u = 3; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) REQUIRE(!s.adjacent(u, v));

    CHECK(make_S_plus(4, 2) == make_complete(4));
    CHECK(make_S_plus(10, 2).edge_count() == 18);
    for (int k = 1; k <= 5; ++k) CHECK(make_S_plus(k + 2, k) == make_complete(k + 2));
    CHECK_THROWS_AS(make_S_plus(4, 3), std::invalid_argument);

    // exactly one edge inside the independent part, between k and k+1
    const Graph sp = make_S_plus(9, 2);
    for (int u = 2; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) REQUIRE(sp.adjacent(u, v) == (u == 2 && v == 3));

    for (int k = 1; k <= 4; ++k)
        for (int n = k + 1; n <= 25; n += 3) CHECK(is_connected(make_S(n, k)));
}

TEST_CASE("complete bipartite") {
    CHECK(make_complete_bipartite(3, 5).edge_count() == 15);
    CHECK(make_complete_bipartite(1, 1) == make_complete(2));
    CHECK(make_complete_bipartite(3, 6).edge_count() == 18);
    CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("lemma24 hosts") {
    for (int k = 1; k <= 4; ++k) {
        const Graph plus = make_lemma24_graph(k, Lemma24Variant::plus);
        CHECK(plus.order() == 3 * k + 1);
        CHECK(plus.edge_count() == k * (2 * k + 1) + 1);
        const Graph p = make_lemma24_graph(k, Lemma24Variant::p);
        CHECK(p.order() == 3 * k + 2);
        CHECK(p.edge_count() == k * (2 * k + 2) + 2);
        const Graph m = make_lemma24_graph(k, Lemma24Variant::m);
        CHECK(m.order() == 3 * k + 2);
        CHECK(m.edge_count() == k * (2 * k + 2) + 2);
    }
    CHECK_THROWS_AS(make_lemma24_graph(0, Lemma24Variant::plus), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_S(10, 2)));
    CHECK(!is_connected(disjoint_union(make_complete(2), make_complete(2))));
    CHECK(!is_connected(make_empty(3)));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("handshake identity") {
    rnd::Engine rng(13);
    auto check = [](const Graph& g) {
        long long sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        REQUIRE(sum == 2 * g.edge_count());
    };
    check(make_S(30, 3));
    check(make_S_plus(30, 3));
    check(make_complete_bipartite(4, 7));
    check(make_lemma24_graph(3, Lemma24Variant::m));
    for (int i = 0; i < 50; ++i) check(rnd::random_graph(rng, 1 + rnd::bounded(rng, 30), 0.4));
}

TEST_CASE("graphs are immutable values") {
    const Graph g = make_path(4);
    const Graph h = g.with_edge(0, 3);
    CHECK(g.edge_count() == 3);
    CHECK(h.edge_count() == 4);
    CHECK(h.without_edge(0, 3) == g);
    CHECK(g.with_edge_toggled(0, 1) == g.without_edge(0, 1));
}

TEST_CASE("graph6 round-trips") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_decode("@") == Graph(1));
    CHECK(graph6_encode(make_path(4)) == "Ch");    // reference value

    std::vector<Graph> zoo{make_S(10, 2),    make_S_plus(30, 2), make_complete(13),
                           make_empty(5),    make_cycle(9),      make_complete_bipartite(5, 9),
                           make_S(62, 4),    make_S(63, 4),      make_S(200, 2),
                           make_lemma24_graph(4, Lemma24Variant::p)};
    rnd::Engine rng(14);
    for (int i = 0; i < 60; ++i) zoo.push_back(rnd::random_graph(rng, 1 + rnd::bounded(rng, 62), 0.3));
    for (const Graph& g : zoo) REQUIRE(graph6_decode(graph6_encode(g)) == g);

    CHECK(graph6_decode(">>graph6<<Ch") == make_path(4));
}

TEST_CASE("graph6 errors are distinct") {
    auto kind_of = [](const std::string& s) {
        try {
            graph6_decode(s);
        } catch (const graph6_error& e) {
            return e.kind();
        }
        throw std::runtime_error("expected a graph6_error");
    };
    CHECK(kind_of("") == Graph6ErrorKind::bad_header);
    CHECK(kind_of("?") == Graph6ErrorKind::bad_header);      // order 0
    CHECK(kind_of("Ch?") == Graph6ErrorKind::trailing_garbage);
    CHECK(kind_of("I}rEEB") == Graph6ErrorKind::truncated);
    CHECK(kind_of("C h") == Graph6ErrorKind::out_of_range_char);
    CHECK(kind_of("D?A") == Graph6ErrorKind::trailing_garbage);    // nonzero padding
    CHECK(kind_of("~") == Graph6ErrorKind::truncated);
}

TEST_CASE("vertex set") {
    VertexSet s{10, {1, 4, 7}};
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK(!s.contains(5));
}
