#include "doctest.h"

#include <numeric>

#include "pmc/count.hpp"
#include "pmc/linegraph.hpp"
#include "support/corpus.hpp"

using namespace pmc;
using namespace pmc::testsupport;

namespace {

bool is_bipartite(const MultiGraph& g) {
    std::vector<int> color(g.num_vertices(), -1);
    Adjacency adj = build_adjacency(g);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<VertexId> stack = {s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj.at[v]) {
                (void)e;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("line graph of the 3-star is a triangle") {
    LineGraphResult r = line_graph(star3());
    CHECK(same_edge_multiset(r.graph, cycle(3)));
    CHECK(r.origin_edge == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("parallel edges double in the line graph") {
    LineGraphResult r = line_graph(parallel_pair(2));
    CHECK(r.graph.num_vertices() == 2);
    CHECK(r.graph.num_edges() == 2);
    CHECK(r.graph.multiplicity(0, 1) == 2);
}

TEST_CASE("line graph of a cycle is the cycle") {
    CHECK(same_edge_multiset(line_graph(cycle(6)).graph, cycle(6)));
}

TEST_CASE("line graph size identities") {
    Rng rng(9090);
    for (int it = 0; it < 60; ++it) {
        MultiGraph g = random_multigraph(rng, 10, 16);
        LineGraphResult r = line_graph(g);
        CHECK(r.graph.num_vertices() == g.num_edges());
        long long expect = 0;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            long long d = g.degree(v);
            expect += d * (d - 1) / 2;
        }
        CHECK(r.graph.num_edges() == expect);
    }
}

TEST_CASE("full subdivision") {
    CHECK(same_edge_multiset(subdivide_all(cycle(3)),
                             MultiGraph(6, {Edge{0, 3}, Edge{3, 1}, Edge{1, 4}, Edge{4, 2},
                                            Edge{0, 5}, Edge{5, 2}})));
    MultiGraph sk4 = subdivide_all(k4());
    CHECK(sk4.num_vertices() == 10);
    CHECK(sk4.num_edges() == 12);
    CHECK(is_bipartite(sk4));

    MultiGraph theta = subdivide_all(parallel_pair(3));
    CHECK(theta.num_vertices() == 5);
    CHECK(theta.num_edges() == 6);
    CHECK(degree_census(theta) == std::map<int, int>{{2, 3}, {3, 2}});
}

TEST_CASE("subdivision is always bipartite and triangle-free") {
    Rng rng(31415);
    for (int it = 0; it < 40; ++it) {
        MultiGraph s = subdivide_all(random_multigraph(rng, 8, 14));
        CHECK(is_bipartite(s));
    }
}

TEST_CASE("clique insertion of K4") {
    MultiGraph ci = clique_inserted(k4());
    CHECK(ci.num_vertices() == 12);
    CHECK(degree_census(ci) == std::map<int, int>{{3, 12}});
    CHECK(is_connected(ci));
}

TEST_CASE("clique insertion of the triple edge is the triangular prism") {
    MultiGraph ci = clique_inserted(parallel_pair(3));
    CHECK(ci.num_vertices() == 6);
    CHECK(ci.num_edges() == 9);
    CHECK(degree_census(ci) == std::map<int, int>{{3, 6}});
    // two vertex-disjoint triangles joined by a matching
    Recognition rec = recognize_cubic_line_graph(ci);
    CHECK(rec.kind == Recognition::Kind::CliqueInserted);
    CHECK(rec.triangles.size() == 2);
    CHECK(rec.preimage->num_vertices() == 2);
    CHECK(rec.preimage->multiplicity(0, 1) == 3);
}

TEST_CASE("clique insertion size law") {
    Rng rng(111);
    for (int it = 0; it < 15; ++it) {
        MultiGraph g = random_cubic_multigraph(rng, 10);
        MultiGraph ci = clique_inserted(g);
        CHECK(ci.num_vertices() == 3 * g.num_vertices());
        CHECK(ci.num_edges() == 9 * g.num_vertices() / 2);
    }
    CHECK_THROWS_AS(clique_inserted(cycle(5)), GraphError);
}

TEST_CASE("recognition basics") {
    CHECK(recognize_cubic_line_graph(k4()).kind == Recognition::Kind::IsK4);

    MultiGraph k33(6, {Edge{0, 3}, Edge{0, 4}, Edge{0, 5}, Edge{1, 3}, Edge{1, 4}, Edge{1, 5},
                       Edge{2, 3}, Edge{2, 4}, Edge{2, 5}});
    CHECK(recognize_cubic_line_graph(k33).kind == Recognition::Kind::NotALineGraph);

    CHECK_THROWS_AS(recognize_cubic_line_graph(cycle(4)), GraphError);
    MultiGraph disconnected(8, {Edge{0, 1}, Edge{0, 1}, Edge{0, 1}, Edge{2, 3}, Edge{2, 3},
                                Edge{2, 3}, Edge{4, 5}, Edge{4, 5}, Edge{4, 5}, Edge{6, 7},
                                Edge{6, 7}, Edge{6, 7}});
    CHECK_THROWS_AS(recognize_cubic_line_graph(disconnected), GraphError);
}

TEST_CASE("recognition round-trips clique insertion") {
    Rng rng(606060);
    for (int it = 0; it < 25; ++it) {
        MultiGraph g = random_cubic_multigraph(rng, 12);
        Recognition rec = recognize_cubic_line_graph(clique_inserted(g));
        REQUIRE(rec.kind == Recognition::Kind::CliqueInserted);
        CHECK(degree_census(*rec.preimage) == degree_census(g));
        CHECK(rec.preimage->num_edges() == g.num_edges());
    }
}
