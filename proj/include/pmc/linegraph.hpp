#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pmc/multigraph.hpp"

namespace pmc {

// L(G): one vertex per edge of G; vertices e, f are joined by i parallel
// edges where i is the number of endpoints the underlying edges share
// (0, 1, or 2 — parallel edges of G share both). origin_edge maps each
// L(G) vertex back to the edge of G it came from and is a bijection.
struct LineGraphResult {
    MultiGraph graph;
    std::vector<EdgeId> origin_edge;
};

LineGraphResult line_graph(const MultiGraph& g);

// Subdivide every edge once: (u,v) becomes u–x–v through a fresh vertex.
// Edge i of g gets subdivision vertex n+i and contributes result edges
// 2i = (u, n+i) and 2i+1 = (n+i, v).
MultiGraph subdivide_all(const MultiGraph& g);

// L(S(g)) for connected cubic g: every vertex becomes a triangle, every
// edge a matching edge between triangles. The result is cubic on 3|V(g)|
// vertices. Throws if g is not connected cubic.
MultiGraph clique_inserted(const MultiGraph& g);

struct Recognition {
    enum class Kind { IsK4, CliqueInserted, NotALineGraph };
    Kind kind;
    // Set iff kind == CliqueInserted: the cubic graph whose clique-inserted
    // form the input is. May contain parallel edges.
    std::optional<MultiGraph> preimage;
    // Vertex partition into triangles backing the preimage, sorted by
    // smallest member.
    std::vector<std::array<VertexId, 3>> triangles;
};

// Decides whether a connected cubic simple graph is K4, a clique-inserted
// graph (returning the cubic preimage obtained by contracting each
// triangle), or neither. Throws if the input is not connected or not
// cubic. A second consistent triangle partition would make the preimage
// ambiguous; that raises logic_error instead of silently picking one.
Recognition recognize_cubic_line_graph(const MultiGraph& g);

}  // namespace pmc
