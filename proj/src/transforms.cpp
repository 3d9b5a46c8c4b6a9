#include "pmc/transforms.hpp"

#include <algorithm>

namespace pmc {

Rewrite delete_vertices(const MultiGraph& g, std::vector<VertexId> victims) {
    std::sort(victims.begin(), victims.end());
    victims.erase(std::unique(victims.begin(), victims.end()), victims.end());
    std::vector<bool> dead(static_cast<size_t>(g.num_vertices()), false);
    for (VertexId v : victims) {
        if (v < 0 || v >= g.num_vertices())
            throw GraphError("delete_vertices: vertex id " + std::to_string(v) + " out of range");
        dead[v] = true;
    }
    Rewrite r;
    r.vertex_map.assign(static_cast<size_t>(g.num_vertices()), -1);
    VertexId next = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!dead[v]) r.vertex_map[v] = next++;
    r.edge_map.assign(static_cast<size_t>(g.num_edges()), -1);
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (dead[e.u] || dead[e.v]) continue;
        r.edge_map[i] = static_cast<EdgeId>(edges.size());
        edges.push_back(Edge{r.vertex_map[e.u], r.vertex_map[e.v]});
    }
    r.graph = MultiGraph(next, std::move(edges));
    return r;
}

Rewrite split_vertex(const MultiGraph& g, const SplitSpec& spec) {
    VertexId u = spec.vertex;
    if (u < 0 || u >= g.num_vertices())
        throw GraphError("split_vertex: vertex id out of range");

    std::vector<EdgeId> incident;
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        if (g.edge(i).touches(u)) incident.push_back(i);

    std::vector<int> side(static_cast<size_t>(g.num_edges()), 0);
    auto mark = [&](const std::vector<EdgeId>& ids, int tag) {
        for (EdgeId e : ids) {
            if (e < 0 || e >= g.num_edges() || !g.edge(e).touches(u))
                throw GraphError("split_vertex: edge " + std::to_string(e) +
                                 " is not incident to the split vertex");
            if (side[e] != 0)
                throw GraphError("split_vertex: edge " + std::to_string(e) +
                                 " appears in both sides of the partition");
            side[e] = tag;
        }
    };
    mark(spec.side_x, 1);
    mark(spec.side_y, 2);
    for (EdgeId e : incident)
        if (side[e] == 0)
            throw GraphError("split_vertex: incident edge " + std::to_string(e) +
                             " is missing from the partition");

    Rewrite r;
    r.vertex_map.assign(static_cast<size_t>(g.num_vertices()), -1);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (v != u) r.vertex_map[v] = v < u ? v : v - 1;
    VertexId u1 = g.num_vertices() - 1;  // u'
    VertexId u2 = g.num_vertices();      // u''
    VertexId x = g.num_vertices() + 1;

    r.edge_map.assign(static_cast<size_t>(g.num_edges()), -1);
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (e.touches(u)) continue;
        r.edge_map[i] = static_cast<EdgeId>(edges.size());
        edges.push_back(Edge{r.vertex_map[e.u], r.vertex_map[e.v]});
    }
    std::vector<EdgeId> xs = spec.side_x, ys = spec.side_y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    for (EdgeId e : xs) edges.push_back(Edge{u1, r.vertex_map[g.edge(e).other(u)]});
    for (EdgeId e : ys) edges.push_back(Edge{u2, r.vertex_map[g.edge(e).other(u)]});
    edges.push_back(Edge{x, u1});
    edges.push_back(Edge{x, u2});
    r.graph = MultiGraph(g.num_vertices() + 2, std::move(edges));
    return r;
}

Rewrite subdivide_edge(const MultiGraph& g, EdgeId e, int times) {
    if (e < 0 || e >= g.num_edges())
        throw GraphError("subdivide_edge: edge id " + std::to_string(e) + " out of range");
    if (times < 0) throw GraphError("subdivide_edge: negative subdivision count");

    Rewrite r;
    r.vertex_map.resize(static_cast<size_t>(g.num_vertices()));
    for (VertexId v = 0; v < g.num_vertices(); ++v) r.vertex_map[v] = v;
    if (times == 0) {
        r.edge_map.resize(static_cast<size_t>(g.num_edges()));
        for (EdgeId i = 0; i < g.num_edges(); ++i) r.edge_map[i] = i;
        r.graph = MultiGraph(g.num_vertices(), {g.edges().begin(), g.edges().end()});
        return r;
    }

    r.edge_map.assign(static_cast<size_t>(g.num_edges()), -1);
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        if (i == e) continue;
        r.edge_map[i] = static_cast<EdgeId>(edges.size());
        edges.push_back(g.edge(i));
    }
    VertexId prev = g.edge(e).u;
    for (int k = 0; k < times; ++k) {
        VertexId w = g.num_vertices() + k;
        edges.push_back(Edge{prev, w});
        prev = w;
    }
    edges.push_back(Edge{prev, g.edge(e).v});
    r.graph = MultiGraph(g.num_vertices() + times, std::move(edges));
    return r;
}

namespace {

struct PendantSite {
    VertexId pendant;
    VertexId neighbor;
    EdgeId other_a, other_b;  // the neighbor's two non-pendant edges
};

PendantSite pendant_site(const MultiGraph& g, VertexId u) {
    if (u < 0 || u >= g.num_vertices())
        throw GraphError("pendant reduction: vertex id out of range");
    if (g.degrees()[u] != 1)
        throw GraphError("pendant reduction: vertex " + std::to_string(u) + " has degree " +
                         std::to_string(g.degrees()[u]) + ", expected 1");
    PendantSite s{u, -1, -1, -1};
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        if (g.edge(i).touches(u)) s.neighbor = g.edge(i).other(u);
    if (g.degrees()[s.neighbor] != 3)
        throw GraphError("pendant reduction: neighbor " + std::to_string(s.neighbor) +
                         " has degree " + std::to_string(g.degrees()[s.neighbor]) +
                         ", expected 3");
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (!e.touches(s.neighbor) || e.touches(u)) continue;
        (s.other_a == -1 ? s.other_a : s.other_b) = i;
    }
    return s;
}

Rewrite compose(const Rewrite& a, const Rewrite& b) {
    Rewrite r;
    r.graph = b.graph;
    r.vertex_map.assign(a.vertex_map.size(), -1);
    for (size_t v = 0; v < a.vertex_map.size(); ++v)
        if (a.vertex_map[v] >= 0) r.vertex_map[v] = b.vertex_map[a.vertex_map[v]];
    r.edge_map.assign(a.edge_map.size(), -1);
    for (size_t e = 0; e < a.edge_map.size(); ++e)
        if (a.edge_map[e] >= 0) r.edge_map[e] = b.edge_map[a.edge_map[e]];
    return r;
}

}  // namespace

Rewrite pendant_reduce(const MultiGraph& g, VertexId u) {
    PendantSite s = pendant_site(g, u);
    VertexId v1 = g.edge(s.other_a).other(s.neighbor);
    VertexId v2 = g.edge(s.other_b).other(s.neighbor);
    if (v1 == v2)
        throw GraphError("pendant reduction: the two other edges at vertex " +
                         std::to_string(s.neighbor) +
                         " are parallel; apply multi_pendant_fix first");
    Rewrite del = delete_vertices(g, {u, s.neighbor});
    std::vector<Edge> edges(del.graph.edges().begin(), del.graph.edges().end());
    edges.push_back(Edge{del.vertex_map[v1], del.vertex_map[v2]});
    del.graph = MultiGraph(del.graph.num_vertices(), std::move(edges));
    return del;
}

Rewrite multi_pendant_fix(const MultiGraph& g, VertexId u) {
    PendantSite s = pendant_site(g, u);
    VertexId v1 = g.edge(s.other_a).other(s.neighbor);
    VertexId v2 = g.edge(s.other_b).other(s.neighbor);
    if (v1 != v2)
        throw GraphError("multi_pendant_fix: the two other edges at vertex " +
                         std::to_string(s.neighbor) + " are not parallel");
    Rewrite first = subdivide_edge(g, s.other_a, 2);
    EdgeId second_edge = first.edge_map[s.other_b];
    Rewrite second = subdivide_edge(first.graph, second_edge, 2);
    return compose(first, second);
}

PendantFixResult pendant_fix_all(const MultiGraph& g) {
    PendantFixResult r{g, {}};
    for (;;) {
        VertexId pendant = -1;
        for (VertexId v = 0; v < r.graph.num_vertices(); ++v)
            if (r.graph.degrees()[v] == 1) {
                pendant = v;
                break;
            }
        if (pendant == -1) break;

        PendantSite s = pendant_site(r.graph, pendant);
        VertexId v1 = r.graph.edge(s.other_a).other(s.neighbor);
        VertexId v2 = r.graph.edge(s.other_b).other(s.neighbor);
        PendantFixLog::Entry entry{graph_digest(r.graph), 0, pendant, v1 == v2};
        MultiGraph work = r.graph;
        if (v1 == v2) work = multi_pendant_fix(work, pendant).graph;
        work = pendant_reduce(work, pendant).graph;
        entry.after_digest = graph_digest(work);
        r.graph = std::move(work);
        r.log.entries.push_back(entry);
    }
    return r;
}

}  // namespace pmc
