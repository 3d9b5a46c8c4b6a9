#include "doctest.h"

#include "pmc/count.hpp"
#include "pmc/linegraph.hpp"
#include "support/corpus.hpp"

using namespace pmc;
using namespace pmc::testsupport;

TEST_CASE("brute counter on the basics") {
    CHECK(count_brute(cycle(6)).value == 2);
    CHECK(count_brute(k4()).value == 3);
    CHECK(count_brute(parallel_pair(3)).value == 3);
    CHECK(count_brute(MultiGraph(0, {})).value == 1);
    CHECK(count_brute(cycle(7)).value == 0);
    CHECK(count_brute(MultiGraph(1, {})).value == 0);
}

TEST_CASE("octahedron: the line graph of K4 has 8 matchings") {
    MultiGraph lk4 = line_graph(k4()).graph;
    CHECK(lk4.num_vertices() == 6);
    CountResult r = count_brute(lk4);
    CHECK(r.value == 8);
    CHECK(r.pow2_exponent == 3);
}

TEST_CASE("frontier counter on the basics") {
    CHECK(count_frontier(cycle(6)).value == 2);
    CHECK(count_frontier(k4()).value == 3);
    CHECK(count_frontier(parallel_pair(3)).value == 3);
    CHECK(count_frontier(MultiGraph(0, {})).value == 1);
    CHECK(count_frontier(cycle(9)).value == 0);
}

TEST_CASE("cross-algorithm equivalence on random multigraphs") {
    Rng rng(424242);
    for (int it = 0; it < 120; ++it) {
        MultiGraph g = random_multigraph(rng, 20, 30);
        CountResult b = count_brute(g);
        CountResult f = count_frontier(g);
        CAPTURE(it);
        CHECK(b.value == f.value);
    }
}

TEST_CASE("memoized brute agrees with the plain one") {
    Rng rng(5150);
    for (int it = 0; it < 40; ++it) {
        MultiGraph g = random_multigraph(rng, 14, 22);
        CHECK(count_brute(g).value == count_brute(g, {.memoize = true}).value);
    }
}

TEST_CASE("deletion identity at a vertex") {
    Rng rng(77);
    for (int it = 0; it < 40; ++it) {
        MultiGraph g = random_multigraph(rng, 10, 14);
        VertexId v = 0;
        mpz_class total = 0;
        for (EdgeId i = 0; i < g.num_edges(); ++i) {
            const Edge& e = g.edge(i);
            if (!e.touches(v)) continue;
            std::vector<Edge> rest;
            VertexId w = e.other(v);
            for (EdgeId k = 0; k < g.num_edges(); ++k) {
                const Edge& f = g.edge(k);
                if (f.touches(v) || f.touches(w)) continue;
                rest.push_back(f);
            }
            // keep ids, the two matched vertices just become isolated-free
            std::vector<Edge> renumbered;
            std::vector<VertexId> map(g.num_vertices(), -1);
            VertexId next = 0;
            for (VertexId x = 0; x < g.num_vertices(); ++x)
                if (x != v && x != w) map[x] = next++;
            for (const Edge& f : rest) renumbered.push_back(Edge{map[f.u], map[f.v]});
            total += count_brute(MultiGraph(next, std::move(renumbered))).value;
        }
        CHECK(total == count_brute(g).value);
    }
}

TEST_CASE("parity: odd vertex count means zero matchings") {
    Rng rng(31337);
    int seen = 0;
    for (int it = 0; it < 60 && seen < 25; ++it) {
        MultiGraph g = random_multigraph(rng, 13, 18);
        if (g.num_vertices() % 2 == 0) continue;
        ++seen;
        CHECK(count_brute(g).value == 0);
        CHECK(count_frontier(g).value == 0);
    }
    CHECK(seen > 0);
}

TEST_CASE("disjoint union multiplies counts") {
    Rng rng(808);
    for (int it = 0; it < 30; ++it) {
        MultiGraph a = random_multigraph(rng, 8, 12);
        MultiGraph b = random_multigraph(rng, 8, 12);
        std::vector<Edge> edges(a.edges().begin(), a.edges().end());
        for (const Edge& e : b.edges())
            edges.push_back(Edge{e.u + a.num_vertices(), e.v + a.num_vertices()});
        MultiGraph both(a.num_vertices() + b.num_vertices(), std::move(edges));
        CHECK(count_brute(both).value == count_brute(a).value * count_brute(b).value);
    }
}

TEST_CASE("frontier width cap raises a resource error, not a wrong answer") {
    // K9 forces nine live slots under any order
    std::vector<Edge> edges;
    for (VertexId a = 0; a < 9; ++a)
        for (VertexId b = a + 1; b < 9; ++b) edges.push_back(Edge{a, b});
    MultiGraph k9(9, std::move(edges));
    CHECK_THROWS_AS(count_frontier(k9, {.order = {}, .width_cap = 4}), ResourceLimitError);
    CHECK(count_frontier(k9).value == 0);  // odd order
}

TEST_CASE("explicit elimination orders do not change the count") {
    Rng rng(2025);
    for (int it = 0; it < 25; ++it) {
        MultiGraph g = random_multigraph(rng, 12, 18);
        std::vector<VertexId> order(g.num_vertices());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        FrontierOptions opts;
        opts.order = order;
        opts.width_cap = 63;
        CHECK(count_frontier(g, opts).value == count_brute(g).value);
    }
    MultiGraph g = cycle(4);
    FrontierOptions bad;
    bad.order = {0, 1, 2, 2};
    CHECK_THROWS_AS(count_frontier(g, bad), GraphError);
}

TEST_CASE("parallel and serial frontier agree") {
    // large enough to cross the parallel threshold on wide layers
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 48; ++i) edges.push_back(Edge{i, (i + 1) % 48});
    for (VertexId i = 0; i < 24; ++i) edges.push_back(Edge{i, 47 - i});
    MultiGraph g(48, std::move(edges));
    FrontierOptions serial;
    serial.parallel = false;
    FrontierOptions parallel;
    parallel.parallel = true;
    CHECK(count_frontier(g, serial).value == count_frontier(g, parallel).value);
}

TEST_CASE("power-of-two annotation") {
    CountResult c;
    c.value = 32;
    CHECK(verify_power_of_two(c) == 5);
    c.value = 3;
    CHECK(verify_power_of_two(c) == std::nullopt);
    c.value = 1;
    CHECK(verify_power_of_two(c) == 0);
    c.value = 0;
    CHECK(verify_power_of_two(c) == std::nullopt);
}
