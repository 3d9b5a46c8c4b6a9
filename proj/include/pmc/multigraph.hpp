#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmc {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Unordered pair of distinct endpoints. Orientation of (u,v) carries no
// meaning; lo()/hi() give the canonical order.
struct Edge {
    VertexId u;
    VertexId v;

    VertexId lo() const { return u < v ? u : v; }
    VertexId hi() const { return u < v ? v : u; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
    bool same_endpoints(const Edge& o) const { return lo() == o.lo() && hi() == o.hi(); }
};

// Raised when a graph value or a graph file violates the format rules
// (loops, out-of-range ids, malformed input).
class GraphError : public std::runtime_error {
  public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a counter or engine hits a configured size/width cap.
// Never used for wrong answers, only for refusing to attempt them.
class ResourceLimitError : public std::runtime_error {
  public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Loop-free multigraph with dense 0-based vertex and edge ids. Parallel
// edges are first-class: each occupies its own EdgeId and the edge list
// order is part of the value. Instances are immutable after construction;
// all queries are const and safe for concurrent use.
class MultiGraph {
  public:
    MultiGraph() = default;
    MultiGraph(VertexId num_vertices, std::vector<Edge> edges);

    VertexId num_vertices() const { return num_vertices_; }
    EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
    const Edge& edge(EdgeId e) const;
    std::span<const Edge> edges() const { return edges_; }

    int degree(VertexId v) const;
    const std::vector<int>& degrees() const { return degrees_; }

    // Number of parallel copies of the endpoint pair {a, b}.
    int multiplicity(VertexId a, VertexId b) const;

  private:
    VertexId num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

// Per-vertex incidence lists in edge-list order: (other endpoint, edge id).
struct Adjacency {
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> at;
};

Adjacency build_adjacency(const MultiGraph& g);

// True iff g has exactly one connected component. The empty graph and the
// single-vertex graph count as connected.
bool is_connected(const MultiGraph& g);

// Edges whose removal increases the number of components. A parallel edge
// is never a bridge.
std::vector<EdgeId> bridges(const MultiGraph& g);

// Histogram of vertex degrees.
std::map<int, int> degree_census(const MultiGraph& g);

// Order-insensitive identity of a graph value: FNV-1a 64-bit over the
// vertex count followed by the endpoint pairs (lo,hi) in sorted order,
// each id hashed as 4 little-endian bytes. Stable within a build; not
// guaranteed stable across versions.
std::uint64_t graph_digest(const MultiGraph& g);

std::string digest_hex(std::uint64_t d);

// Value equality up to edge order: same vertex count and same endpoint
// pair multiset.
bool same_edge_multiset(const MultiGraph& a, const MultiGraph& b);

}  // namespace pmc
