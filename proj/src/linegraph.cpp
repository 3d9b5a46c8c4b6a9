#include "pmc/linegraph.hpp"

#include <algorithm>
#include <numeric>

namespace pmc {

LineGraphResult line_graph(const MultiGraph& g) {
    // Each pair of edges sharing a vertex yields one L-edge per shared
    // vertex, so a parallel pair (shared at both ends) comes out doubled —
    // exactly the multiplicity rule, and |E(L)| = sum over v of C(d(v),2).
    Adjacency adj = build_adjacency(g);
    std::vector<Edge> ledges;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = adj.at[v];
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                ledges.push_back(Edge{inc[i].second, inc[j].second});
    }
    LineGraphResult r{MultiGraph(g.num_edges(), std::move(ledges)), {}};
    r.origin_edge.resize(static_cast<size_t>(g.num_edges()));
    std::iota(r.origin_edge.begin(), r.origin_edge.end(), 0);
    return r;
}

MultiGraph subdivide_all(const MultiGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(2 * static_cast<size_t>(g.num_edges()));
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        VertexId x = g.num_vertices() + i;
        edges.push_back(Edge{g.edge(i).u, x});
        edges.push_back(Edge{x, g.edge(i).v});
    }
    return MultiGraph(g.num_vertices() + g.num_edges(), std::move(edges));
}

namespace {

bool is_cubic(const MultiGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degrees()[v] != 3) return false;
    return g.num_vertices() > 0;
}

}  // namespace

MultiGraph clique_inserted(const MultiGraph& g) {
    if (!is_cubic(g)) throw GraphError("clique insertion requires a cubic graph");
    if (!is_connected(g)) throw GraphError("clique insertion requires a connected graph");
    return line_graph(subdivide_all(g)).graph;
}

namespace {

bool is_k4(const MultiGraph& g) {
    if (g.num_vertices() != 4 || g.num_edges() != 6) return false;
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b)
            if (g.multiplicity(a, b) != 1) return false;
    return true;
}

struct TrianglePartitionSearch {
    const std::vector<std::vector<bool>>& adj_matrix;
    VertexId n;
    std::vector<std::array<VertexId, 3>> all_triangles;
    std::vector<int> assigned;  // triangle index per vertex, -1 = free
    std::vector<std::array<VertexId, 3>> current;
    std::vector<std::vector<std::array<VertexId, 3>>> solutions;

    void search() {
        if (solutions.size() >= 2) return;
        VertexId v = -1;
        for (VertexId i = 0; i < n; ++i)
            if (assigned[i] == -1) {
                v = i;
                break;
            }
        if (v == -1) {
            solutions.push_back(current);
            return;
        }
        for (const auto& t : all_triangles) {
            if (t[0] != v) continue;  // triangles sorted; v is its smallest free vertex
            if (assigned[t[1]] != -1 || assigned[t[2]] != -1) continue;
            for (VertexId x : t) assigned[x] = static_cast<int>(current.size());
            current.push_back(t);
            search();
            current.pop_back();
            for (VertexId x : t) assigned[x] = -1;
            if (solutions.size() >= 2) return;
        }
    }
};

}  // namespace

Recognition recognize_cubic_line_graph(const MultiGraph& g) {
    if (!is_cubic(g)) throw GraphError("recognition requires a cubic graph");
    if (!is_connected(g)) throw GraphError("recognition requires a connected graph");

    if (is_k4(g)) return Recognition{Recognition::Kind::IsK4, std::nullopt, {}};

    // A clique-inserted graph is simple; any parallel pair rules it out.
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        if (g.multiplicity(g.edge(i).u, g.edge(i).v) > 1)
            return Recognition{Recognition::Kind::NotALineGraph, std::nullopt, {}};
    if (g.num_vertices() % 3 != 0)
        return Recognition{Recognition::Kind::NotALineGraph, std::nullopt, {}};

    VertexId n = g.num_vertices();
    std::vector<std::vector<bool>> adjm(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) adjm[e.u][e.v] = adjm[e.v][e.u] = true;

    TrianglePartitionSearch search{adjm, n, {}, std::vector<int>(n, -1), {}, {}};
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (!adjm[a][b]) continue;
            for (VertexId c = b + 1; c < n; ++c)
                if (adjm[a][c] && adjm[b][c]) search.all_triangles.push_back({a, b, c});
        }
    search.search();

    if (search.solutions.empty())
        return Recognition{Recognition::Kind::NotALineGraph, std::nullopt, {}};
    if (search.solutions.size() > 1)
        throw std::logic_error("triangle partition is not unique; preimage would be ambiguous");

    const auto& triangles = search.solutions.front();
    std::vector<int> triangle_of(n, -1);
    for (size_t t = 0; t < triangles.size(); ++t)
        for (VertexId x : triangles[t]) triangle_of[x] = static_cast<int>(t);

    // Non-triangle edges contract to preimage edges. In a cubic simple
    // graph each vertex has exactly one such edge, so they form a perfect
    // matching between triangles and the preimage is cubic.
    std::vector<Edge> pre_edges;
    for (const Edge& e : g.edges()) {
        if (triangle_of[e.u] == triangle_of[e.v]) continue;
        pre_edges.push_back(Edge{static_cast<VertexId>(triangle_of[e.u]),
                                 static_cast<VertexId>(triangle_of[e.v])});
    }
    MultiGraph preimage(static_cast<VertexId>(triangles.size()), std::move(pre_edges));
    if (!is_cubic(preimage) || !is_connected(preimage))
        throw std::logic_error("contracted preimage is not connected cubic");
    return Recognition{Recognition::Kind::CliqueInserted, std::move(preimage), triangles};
}

}  // namespace pmc
