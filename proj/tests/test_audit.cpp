#include <catch2/catch_amalgamated.hpp>

#include "slq/audit.hpp"
#include "slq/randgraph.hpp"
#include "slq/serialize.hpp"

using namespace slq;

namespace {
const AuditEntry& entry(const AuditReport& r, const std::string& id) {
    for (const auto& e : r.entries)
        if (e.id == id) return e;
    throw std::runtime_error("no entry " + id);
}
} // namespace

TEST_CASE("threshold config") {
    const ThresholdConfig c2 = ThresholdConfig::for_k(2);
    CHECK(c2.alpha == Catch::Approx(1.0 / 640.0).margin(1e-18));
    CHECK(c2.beta == Catch::Approx(1.0 / 160.0).margin(1e-18));
    const ThresholdConfig c1 = ThresholdConfig::for_k(1);
    CHECK(c1.alpha == Catch::Approx(1.0 / 80.0).margin(1e-18));
    CHECK(c1.beta == 2 * c1.alpha);
    CHECK_THROWS_AS(ThresholdConfig::for_k(0), std::invalid_argument);
}

TEST_CASE("partition on the constructions") {
    {
        const Graph g = make_S(400, 2);
        const SpectralResult r = spectral_radius(g);
        REQUIRE(r.converged);
        const ThresholdPartition p = partition(g, r, 2);
        CHECK(p.Lprime.members == std::vector<int>{0, 1});
        CHECK(p.Sprime.size() == 398);
        CHECK(p.L.size() == 400);    // independent components sit above alpha here

        // symmetry formula for the independent part: x = k / (q - k)
        const double expect = 2.0 / (r.q - 2.0);
        for (int v = 2; v < 400; ++v) REQUIRE(r.x[v] == Catch::Approx(expect).margin(1e-8));
    }
    {
        const Graph g = make_S(100, 2);
        const ThresholdPartition p = partition(g, spectral_radius(g), 2);
        CHECK(p.Lprime.size() == 100);    // x_indep ~ 0.02 > beta at this n
    }
    {
        const Graph g = make_complete(10);
        const ThresholdPartition p = partition(g, spectral_radius(g), 2);
        CHECK(p.Lprime.size() == 10);
    }
}

TEST_CASE("partition rejects unconverged input and is a true partition") {
    SpectralResult fake;
    fake.converged = false;
    fake.x.assign(5, 1.0);
    CHECK_THROWS_AS(partition(make_complete(5), fake, 2), std::invalid_argument);

    rnd::Engine rng(41);
    for (int i = 0; i < 20; ++i) {
        const Graph g = rnd::random_connected_graph(rng, 5 + rnd::bounded(rng, 30), 0.3);
        const SpectralResult r = spectral_radius(g);
        const ThresholdPartition p = partition(g, r, 1 + rnd::bounded(rng, 3));
        REQUIRE(p.L.size() + p.S.size() == g.order());
        REQUIRE(p.Lprime.size() + p.Sprime.size() == g.order());
        for (int v : p.Lprime.members) REQUIRE(p.L.contains(v));    // L' inside L
    }
}

TEST_CASE("boundary components are flagged") {
    SpectralResult r;
    r.converged = true;
    r.tol = 1e-10;
    r.q = 1.0;
    const double alpha = ThresholdConfig::for_k(2).alpha;
    r.x = {1.0, alpha, alpha / 2};
    const ThresholdPartition p = partition(make_path(3), r, 2);
    CHECK(p.boundary_vertices == std::vector<int>{1});
    CHECK(p.L.contains(1));    // >= comparison keeps the exact tie in L
}

TEST_CASE("audit entries on S_400_2") {
    const AuditReport rep = run_audit(make_S(400, 2), 2, false);
    CHECK(entry(rep, "eigen-identity").holds);
    CHECK(entry(rep, "neighbor-sum-bound").holds);
    CHECK(entry(rep, "neighbor-sum-bound").hypothesis_met);
    CHECK(entry(rep, "degree-weighted-sum-bound").hypothesis_met);    // e = 797 <= 2000
    CHECK(entry(rep, "degree-weighted-sum-bound").holds);
    CHECK(entry(rep, "two-step-sum-bound").holds);
    CHECK(entry(rep, "large-set-bound").holds);
    for (const char* id : {"top-set-min-degree", "top-set-size", "top-set-component-floor",
                           "common-neighborhood-structure"}) {
        CHECK(entry(rep, id).holds);
        CHECK(!entry(rep, id).hypothesis_met);    // n = 400 << 256000 k^8
    }
    CHECK(!rep.hard_failure());
    CHECK(rep.Lprime_size == 2);
}

TEST_CASE("informational failures outside hypothesis") {
    // K_30 with k=2: e(G) = 435 > (2k+1)n = 150, so the 5kn bounds do not
    // apply; their conclusions indeed fail, recorded as informational.
    const AuditReport rep = run_audit(make_complete(30), 2, false);
    const AuditEntry& e7 = entry(rep, "degree-weighted-sum-bound");
    CHECK(!e7.hypothesis_met);
    CHECK(!e7.holds);    // 29*29 = 841 > 300
    CHECK(!rep.hard_failure());

    const AuditReport rep2 = run_audit(make_S(100, 2), 2, false);
    const AuditEntry& size = entry(rep2, "top-set-size");
    CHECK(!size.hypothesis_met);
    CHECK(!size.holds);
    CHECK(size.slack < 0.0);
    CHECK(!rep2.hard_failure());
}

TEST_CASE("structure audit distinguishes prime") {
    const AuditReport plus_ok = run_audit(make_S_plus(400, 2), 2, true);
    CHECK(entry(plus_ok, "common-neighborhood-structure").holds);

    const AuditReport plus_strict = run_audit(make_S_plus(400, 2), 2, false);
    const AuditEntry& s = entry(plus_strict, "common-neighborhood-structure");
    CHECK(!s.holds);
    CHECK(s.slack == -1.0);    // exactly one edge too many inside R

    const AuditReport base = run_audit(make_S(400, 2), 2, false);
    CHECK(entry(base, "common-neighborhood-structure").holds);
}

TEST_CASE("audit report is deterministic") {
    const Graph g = make_S_plus(150, 3);
    const std::string a = audit_report_json(run_audit(g, 3, true)).dump();
    const std::string b = audit_report_json(run_audit(g, 3, true)).dump();
    CHECK(a == b);
}
