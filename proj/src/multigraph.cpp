#include "pmc/multigraph.hpp"

#include <algorithm>
#include <functional>

namespace pmc {

MultiGraph::MultiGraph(VertexId num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0)
        throw GraphError("negative vertex count");
    degrees_.assign(static_cast<size_t>(num_vertices_), 0);
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_)
            throw GraphError("edge " + std::to_string(i) + ": endpoint out of range (" +
                             std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw GraphError("edge " + std::to_string(i) + ": loop at vertex " +
                             std::to_string(e.u));
        ++degrees_[e.u];
        ++degrees_[e.v];
    }
}

const Edge& MultiGraph::edge(EdgeId e) const {
    if (e < 0 || e >= num_edges())
        throw GraphError("edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

int MultiGraph::degree(VertexId v) const {
    if (v < 0 || v >= num_vertices_)
        throw GraphError("vertex id " + std::to_string(v) + " out of range");
    return degrees_[v];
}

int MultiGraph::multiplicity(VertexId a, VertexId b) const {
    int k = 0;
    for (const Edge& e : edges_)
        if (e.same_endpoints(Edge{a, b})) ++k;
    return k;
}

Adjacency build_adjacency(const MultiGraph& g) {
    Adjacency adj;
    adj.at.resize(static_cast<size_t>(g.num_vertices()));
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        adj.at[e.u].emplace_back(e.v, i);
        adj.at[e.v].emplace_back(e.u, i);
    }
    return adj;
}

bool is_connected(const MultiGraph& g) {
    if (g.num_vertices() <= 1) return true;
    Adjacency adj = build_adjacency(g);
    std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
    std::vector<VertexId> stack = {0};
    seen[0] = true;
    VertexId reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj.at[v]) {
            (void)e;
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.num_vertices();
}

namespace {

// Iterative DFS lowpoint computation; the entering edge id is skipped, so a
// parallel copy registers as a back edge and keeps its pair off the list.
struct BridgeDfs {
    const Adjacency& adj;
    std::vector<int> disc, low;
    std::vector<EdgeId> out;
    int timer = 0;

    explicit BridgeDfs(const Adjacency& a, size_t n) : adj(a), disc(n, -1), low(n, -1) {}

    void run(VertexId root) {
        struct Frame {
            VertexId v;
            EdgeId in_edge;
            size_t next;
        };
        std::vector<Frame> stack;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj.at[f.v].size()) {
                auto [w, e] = adj.at[f.v][f.next++];
                if (e == f.in_edge) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                VertexId v = f.v;
                EdgeId in = f.in_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out.push_back(in);
                }
            }
        }
    }
};

}  // namespace

std::vector<EdgeId> bridges(const MultiGraph& g) {
    Adjacency adj = build_adjacency(g);
    BridgeDfs dfs(adj, static_cast<size_t>(g.num_vertices()));
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (dfs.disc[v] == -1) dfs.run(v);
    std::sort(dfs.out.begin(), dfs.out.end());
    return dfs.out;
}

std::map<int, int> degree_census(const MultiGraph& g) {
    std::map<int, int> census;
    for (VertexId v = 0; v < g.num_vertices(); ++v) ++census[g.degrees()[v]];
    return census;
}

std::uint64_t graph_digest(const MultiGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<size_t>(g.num_edges()));
    for (const Edge& e : g.edges()) pairs.emplace_back(e.lo(), e.hi());
    std::sort(pairs.begin(), pairs.end());

    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix32 = [&h](std::uint32_t x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix32(static_cast<std::uint32_t>(g.num_vertices()));
    for (auto [a, b] : pairs) {
        mix32(static_cast<std::uint32_t>(a));
        mix32(static_cast<std::uint32_t>(b));
    }
    return h;
}

std::string digest_hex(std::uint64_t d) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[d & 0xf];
        d >>= 4;
    }
    return s;
}

bool same_edge_multiset(const MultiGraph& a, const MultiGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    auto key = [](const MultiGraph& g) {
        std::vector<std::pair<VertexId, VertexId>> k;
        for (const Edge& e : g.edges()) k.emplace_back(e.lo(), e.hi());
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

}  // namespace pmc
