#pragma once

#include <cstdint>
#include <vector>

#include "pmc/multigraph.hpp"

namespace pmc {

// Result of a rewrite. Vertex and edge ids are renumbered densely; the
// maps record old id -> new id with -1 for deleted/replaced entries.
struct Rewrite {
    MultiGraph graph;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
};

// Removes the listed vertices and every incident edge; survivors keep
// their relative order, as do surviving edges.
Rewrite delete_vertices(const MultiGraph& g, std::vector<VertexId> victims);

// Partition of the edges incident to a vertex. Either side may be empty;
// sides must be disjoint and together cover the incident edges exactly
// (each parallel copy individually).
struct SplitSpec {
    VertexId vertex;
    std::vector<EdgeId> side_x;
    std::vector<EdgeId> side_y;
};

// Vertex splitting: remove u, insert fresh vertices u', u'' and x with
// edges x-u' and x-u''; edges of side X reattach to u', side Y to u''.
// Preserves the perfect matching count. The fresh vertices take the next
// three dense ids in the order u', u'', x, so outputs are reproducible
// byte for byte.
Rewrite split_vertex(const MultiGraph& g, const SplitSpec& spec);

// Replace edge e = (u,v) by the path u-w1-...-w_times-v; times = 0 is the
// identity. Fresh vertices take the next dense ids in path order and the
// path edges are appended after the surviving edges.
Rewrite subdivide_edge(const MultiGraph& g, EdgeId e, int times);

// Pendant reduction: for a degree-1 vertex u whose neighbor v has degree 3
// with its two other edges going to distinct vertices v1 != v2, delete u
// and v and connect v1 to v2. Preserves M(L(.)). Refuses the parallel
// case; callers invoke multi_pendant_fix first.
Rewrite pendant_reduce(const MultiGraph& g, VertexId u);

// The parallel-edge companion: when v's two other edges are parallel,
// subdivide each of them twice (M(L(.)) unchanged), after which
// pendant_reduce applies at u.
Rewrite multi_pendant_fix(const MultiGraph& g, VertexId u);

// Exhausts pendant reductions (applying multi_pendant_fix where needed)
// until no degree-1 vertex remains. Throws if a pendant's neighbor does
// not have degree 3. The log records one entry per reduction.
struct PendantFixLog {
    struct Entry {
        std::uint64_t before_digest;
        std::uint64_t after_digest;
        VertexId pendant;
        bool parallel_fix;
    };
    std::vector<Entry> entries;
};

struct PendantFixResult {
    MultiGraph graph;
    PendantFixLog log;
};

PendantFixResult pendant_fix_all(const MultiGraph& g);

}  // namespace pmc
