#include "doctest.h"

#include "hq/devtheory.hpp"
#include "hq/prf.hpp"

using namespace hq;

namespace {

Hypergraph seeded_graph(int n, int k, std::uint64_t seed, int num, int den) {
    Hypergraph H(n, k);
    KeyedStream ks(seed, "test.graph");
    for (std::uint64_t r = 0; r < H.universe(); ++r)
        if (ks.below(std::uint64_t(den)) < std::uint64_t(num)) H.add_edge_rank(r);
    return H;
}

}  // namespace

TEST_SUITE("devtheory") {

TEST_CASE("restricting a doubled coordinate never raises the deviation sum") {
    for (std::uint64_t seed : {4ull, 7ull, 12ull}) {
        Hypergraph H = seeded_graph(6, 3, seed, 1, 2);
        FactoredPredicate all = FactoredPredicate::all(3);
        for (int coord : {2, 3}) {  // doubled coordinates at l = 2
            FactoredPredicate Q = FactoredPredicate::cylinder(
                3, coord, [](const VertexId* t) { return t[0] % 2 == 0; });
            SubdevReport rep = subdev_inequality_check(H, 2, all, Q);
            CAPTURE(seed);
            CAPTURE(coord);
            CHECK(rep.pass());
        }
        // also under an already-restricted P
        FactoredPredicate P = FactoredPredicate::cylinder(
            3, 3, [](const VertexId* t) { return t[0] < 4; });
        FactoredPredicate Q = FactoredPredicate::cylinder(
            3, 2, [](const VertexId* t) { return t[1] > 0; });
        CHECK(subdev_inequality_check(H, 2, P, Q).pass());
    }
}

TEST_CASE("subdev guard rejects undoubled coordinates and compound Q") {
    Hypergraph H = seeded_graph(6, 3, 1, 1, 2);
    FactoredPredicate all = FactoredPredicate::all(3);
    FactoredPredicate Q1 = FactoredPredicate::cylinder(
        3, 1, [](const VertexId*) { return true; });
    CHECK_THROWS_AS(subdev_inequality_check(H, 2, all, Q1), std::invalid_argument);
    FactoredPredicate Q2 = FactoredPredicate::cylinder(
        3, 2, [](const VertexId*) { return true; });
    FactoredPredicate Q3 = Q2.intersect(FactoredPredicate::cylinder(
        3, 3, [](const VertexId*) { return true; }));
    CHECK_THROWS_AS(subdev_inequality_check(H, 2, all, Q3), std::invalid_argument);
}

TEST_CASE("the squared lower-level deviation is bounded by the next level") {
    for (std::uint64_t seed : {2ull, 9ull}) {
        Hypergraph H = seeded_graph(6, 3, seed, 1, 2);
        FactoredPredicate all = FactoredPredicate::all(3);
        for (int l = 1; l <= 3; ++l) {
            CauchyReport rep = cauchy_step_check(H, l, all);
            CAPTURE(seed);
            CAPTURE(l);
            CHECK(rep.pass());
            CHECK(rep.rhs_scaled >= 0);  // certifies dev_l >= 0
        }
        // with a doubled-coordinate restriction in place
        FactoredPredicate P = FactoredPredicate::cylinder(
            3, 3, [](const VertexId* t) { return t[0] != t[1]; });
        CauchyReport rep = cauchy_step_check(H, 2, P);
        CHECK(rep.pass());
    }
}

TEST_CASE("level-0 deviation over a family product counts misses minus hits") {
    for (std::uint64_t seed : {3ull, 11ull}) {
        Hypergraph H = seeded_graph(8, 3, seed, 1, 2);
        SubsetFamily S1(8, 2), S2(8, 1);
        KeyedStream ks(seed, "fam");
        for (const KSet& s : enumerate_ksubsets(8, 2))
            if (ks.below(3) == 0) S1.add(s);
        for (int v = 0; v < 8; ++v)
            if (ks.below(2)) S2.add({VertexId(v)});
        if (S1.size() == 0) S1.add({0, 1});
        if (S2.size() == 0) S2.add({7});
        DevToExpReport rep = devtoexp_pipeline_check(H, 2, 1, S1, S2);
        CAPTURE(seed);
        CHECK(rep.pass());
        CHECK(rep.k1fact_k2fact == 2);
        CHECK(rep.edges + rep.misses == S1.size() * S2.size());
        // independent recount of the edge pairs
        std::uint64_t edges = 0;
        for (const KSet& a : S1.sets())
            for (const KSet& b : S2.sets()) {
                if (b[0] == a[0] || b[0] == a[1]) continue;
                KSet u = {a[0], a[1], b[0]};
                std::sort(u.begin(), u.end());
                if (H.has_edge(u)) ++edges;
            }
        CHECK(rep.edges == edges);
    }
}

TEST_CASE("empty graph: every family pair is a miss") {
    Hypergraph H(7, 3);
    SubsetFamily S1(7, 2), S2(7, 1);
    S1.add({0, 1});
    S1.add({2, 3});
    S2.add({4});
    S2.add({5});
    DevToExpReport rep = devtoexp_pipeline_check(H, 2, 1, S1, S2);
    CHECK(rep.pass());
    CHECK(rep.edges == 0);
    CHECK(rep.misses == 4);
    CHECK(rep.dev0 == 2 * 4);  // k1! k2! * misses
}

TEST_CASE("devtoexp validates shapes") {
    Hypergraph H(7, 3);
    SubsetFamily S1(7, 2), S2(7, 2);
    S1.add({0, 1});
    S2.add({2, 3});
    CHECK_THROWS_AS(devtoexp_pipeline_check(H, 2, 2, S1, S2), std::invalid_argument);
    SubsetFamily W(6, 1);
    W.add({0});
    CHECK_THROWS_AS(devtoexp_pipeline_check(H, 2, 1, S1, W), std::invalid_argument);
}

}  // TEST_SUITE
