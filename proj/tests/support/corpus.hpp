#pragma once

// Seeded random graph corpora shared by the unit and acceptance suites.
// Everything here is driven by an explicit mt19937_64 so failures replay.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pmc/multigraph.hpp"

namespace pmc::testsupport {

using Rng = std::mt19937_64;

inline MultiGraph k4() {
    return MultiGraph(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}});
}

inline MultiGraph cycle(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back(Edge{i, (i + 1) % k});
    return MultiGraph(k, std::move(edges));
}

inline MultiGraph path(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back(Edge{i, i + 1});
    return MultiGraph(k, std::move(edges));
}

inline MultiGraph parallel_pair(int copies) {
    std::vector<Edge> edges(copies, Edge{0, 1});
    return MultiGraph(2, std::move(edges));
}

inline MultiGraph star3() {
    return MultiGraph(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}});
}

// Loop-free random multigraph; may be disconnected, parallels common.
inline MultiGraph random_multigraph(Rng& rng, int max_vertices, int max_edges) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> ne(1, max_edges);
    int m = ne(rng);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        VertexId u = pick(rng), v = pick(rng);
        while (v == u) v = pick(rng);
        edges.push_back(Edge{u, v});
    }
    return MultiGraph(n, std::move(edges));
}

namespace detail {

// Pair up degree stubs; empty result when the pairing hit a loop.
inline std::vector<Edge> pair_stubs(Rng& rng, const std::vector<int>& stub_counts) {
    std::vector<VertexId> stubs;
    for (size_t v = 0; v < stub_counts.size(); ++v)
        for (int k = 0; k < stub_counts[v]; ++k) stubs.push_back(static_cast<VertexId>(v));
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        if (stubs[i] == stubs[i + 1]) return {};
        edges.push_back(Edge{stubs[i], stubs[i + 1]});
    }
    return edges;
}

}  // namespace detail

// Connected multigraph with every degree in {2,3} and an even number of
// edges (at most max_edges), built by stub pairing with loop rejection.
inline MultiGraph random_degree23_graph(Rng& rng, int max_edges = 14) {
    for (;;) {
        std::uniform_int_distribution<int> half3(0, std::max(3, max_edges / 4));
        int n3 = 2 * half3(rng);
        std::uniform_int_distribution<int> c2(n3 == 0 ? 2 : 0, std::max(8, max_edges / 2));
        int n2 = c2(rng);
        int stubs = 3 * n3 + 2 * n2;
        if (stubs == 0 || stubs % 4 != 0) continue;  // even edge count needed
        if (stubs / 2 > max_edges) continue;

        std::vector<int> counts(static_cast<size_t>(n3 + n2));
        for (int v = 0; v < n3; ++v) counts[v] = 3;
        for (int v = n3; v < n3 + n2; ++v) counts[v] = 2;
        std::vector<Edge> edges = detail::pair_stubs(rng, counts);
        if (edges.empty()) continue;
        MultiGraph g(n3 + n2, std::move(edges));
        if (!is_connected(g)) continue;
        return g;
    }
}

// Connected cubic multigraph on an even number of vertices <= max_vertices.
inline MultiGraph random_cubic_multigraph(Rng& rng, int max_vertices = 12) {
    for (;;) {
        std::uniform_int_distribution<int> half(2, max_vertices / 2);
        int n = 2 * half(rng);
        std::vector<int> counts(static_cast<size_t>(n), 3);
        std::vector<Edge> edges = detail::pair_stubs(rng, counts);
        if (edges.empty()) continue;
        MultiGraph g(n, std::move(edges));
        if (!is_connected(g)) continue;
        return g;
    }
}

// Graph with guaranteed pendants whose neighbors have degree 3: a random
// degree-{2,3} graph with fresh pendants hung off two distinct degree-2
// vertices. Two pendants keep the edge count even, so line-graph counts
// stay nonzero and the invariance checks bite. Returns the first pendant
// id through `pendant`.
inline MultiGraph random_pendant_site_graph(Rng& rng, VertexId& pendant, int max_edges = 12) {
    for (;;) {
        MultiGraph g = random_degree23_graph(rng, max_edges);
        std::vector<VertexId> deg2;
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (g.degrees()[v] == 2) deg2.push_back(v);
        if (deg2.size() < 2) continue;
        std::shuffle(deg2.begin(), deg2.end(), rng);
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        pendant = g.num_vertices();
        edges.push_back(Edge{deg2[0], pendant});
        edges.push_back(Edge{deg2[1], static_cast<VertexId>(pendant + 1)});
        return MultiGraph(g.num_vertices() + 2, std::move(edges));
    }
}

}  // namespace pmc::testsupport
