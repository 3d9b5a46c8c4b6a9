#include "pmc/lattices.hpp"

#include <algorithm>
#include <cmath>

#include "pmc/linegraph.hpp"
#include "pmc/transforms.hpp"

namespace pmc {

const char* family_name(Family f) {
    switch (f) {
        case Family::HexT: return "hex-t";
        case Family::R_T: return "r-t";
        case Family::R_C: return "r-c";
        case Family::R_F: return "r-f";
        case Family::K_T: return "k-t";
        case Family::K_C: return "k-c";
        case Family::K_F: return "k-f";
        case Family::SG2: return "sg2";
        case Family::Gn: return "gn";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::HexT, Family::R_T, Family::R_C, Family::R_F, Family::K_T,
                     Family::K_C, Family::K_F, Family::SG2, Family::Gn})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

HexTorus hex_torus(int n, int m) {
    if (n < 0 || m < 0) throw GraphError("hexagonal torus parameters must be non-negative");
    int cols = n + 1, rows = m + 1;
    auto vid = [cols](int i, int j, int s) {
        return static_cast<VertexId>(2 * (i * cols + j) + s);
    };
    HexTorus h;
    h.degenerate = n == 0 || m == 0;
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(3 * rows * cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            EdgeId base = static_cast<EdgeId>(edges.size());
            edges.push_back(Edge{vid(i, j, 0), vid(i, j, 1)});
            edges.push_back(Edge{vid(i, j, 0), vid(i, (j + cols - 1) % cols, 1)});
            edges.push_back(Edge{vid(i, j, 0), vid((i + rows - 1) % rows, j, 1)});
            if (j == 0) h.wrap_j.push_back(base + 1);
            if (i == 0) h.wrap_i.push_back(base + 2);
        }
    h.graph = MultiGraph(static_cast<VertexId>(2 * rows * cols), std::move(edges));
    return h;
}

namespace {

CutHex open_wraps(const HexTorus& h, const std::vector<EdgeId>& wraps) {
    std::vector<bool> split(static_cast<size_t>(h.graph.num_edges()), false);
    for (EdgeId e : wraps) split[e] = true;

    CutHex out;
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < h.graph.num_edges(); ++i)
        if (!split[i]) edges.push_back(h.graph.edge(i));
    VertexId next = h.graph.num_vertices();
    for (EdgeId i : wraps) {
        const Edge& e = h.graph.edge(i);
        VertexId p = next++;
        VertexId q = next++;
        out.pendant_edges.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back(Edge{e.u, p});
        out.pendant_edges.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back(Edge{e.v, q});
        out.outer_pendants.push_back(q);
    }
    out.graph = MultiGraph(next, std::move(edges));
    return out;
}

}  // namespace

CutHex hex_cut_cylinder(int n, int m) {
    HexTorus h = hex_torus(n, m);
    return open_wraps(h, h.wrap_i);
}

CutHex hex_cut_free(int n, int m) {
    HexTorus h = hex_torus(n, m);
    std::vector<EdgeId> wraps = h.wrap_i;
    wraps.insert(wraps.end(), h.wrap_j.begin(), h.wrap_j.end());
    return open_wraps(h, wraps);
}

MultiGraph subdivide_except(const MultiGraph& g, const std::vector<EdgeId>& keep) {
    std::vector<bool> kept(static_cast<size_t>(g.num_edges()), false);
    for (EdgeId e : keep) kept[e] = true;
    std::vector<Edge> edges;
    VertexId next = g.num_vertices();
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        if (kept[i]) {
            edges.push_back(e);
        } else {
            VertexId x = next++;
            edges.push_back(Edge{e.u, x});
            edges.push_back(Edge{x, e.v});
        }
    }
    return MultiGraph(next, std::move(edges));
}

CompanionGraph sierpinski_companion(int stage) {
    if (stage < 0) throw GraphError("companion stage must be non-negative");
    if (stage > 13) throw ResourceLimitError("companion stage above 13 is too large to build");
    if (stage == 0)
        return CompanionGraph{MultiGraph(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}}), {1, 2, 3}};

    CompanionGraph prev = sierpinski_companion(stage - 1);
    VertexId nv = prev.graph.num_vertices();
    Adjacency adj = build_adjacency(prev.graph);
    auto pendant_neighbor = [&](VertexId c) { return adj.at[c].front().first; };

    std::vector<Edge> edges;
    std::vector<VertexId> dead;
    // junctions A2-B1, B2-C1, C2-A1 (copy offsets 0, nv, 2nv)
    struct Junction {
        int from_copy, from_corner, to_copy, to_corner;
    };
    const Junction junctions[3] = {{0, 1, 1, 0}, {1, 1, 2, 0}, {2, 1, 0, 0}};
    for (const Junction& jn : junctions) {
        dead.push_back(prev.corners[jn.from_corner] + jn.from_copy * nv);
        dead.push_back(prev.corners[jn.to_corner] + jn.to_copy * nv);
    }
    std::vector<bool> is_dead(static_cast<size_t>(3 * nv), false);
    for (VertexId v : dead) is_dead[v] = true;

    for (int copy = 0; copy < 3; ++copy)
        for (const Edge& e : prev.graph.edges()) {
            Edge shifted{e.u + copy * nv, e.v + copy * nv};
            if (is_dead[shifted.u] || is_dead[shifted.v]) continue;
            edges.push_back(shifted);
        }
    for (const Junction& jn : junctions)
        edges.push_back(Edge{pendant_neighbor(prev.corners[jn.from_corner]) + jn.from_copy * nv,
                             pendant_neighbor(prev.corners[jn.to_corner]) + jn.to_copy * nv});

    MultiGraph merged(3 * nv, std::move(edges));
    Rewrite compact = delete_vertices(merged, dead);
    CompanionGraph out;
    out.graph = std::move(compact.graph);
    for (int copy = 0; copy < 3; ++copy)
        out.corners[copy] = compact.vertex_map[prev.corners[2] + copy * nv];
    return out;
}

MultiGraph gen_hex_torus(int n, int m) {
    if (n < 0 || m < 0) throw GraphError("hex-t: parameters must be non-negative");
    return hex_torus(n, m).graph;
}

MultiGraph gen_3_12_12(char bc, int n, int m) {
    if (n < 1 || m < 1) throw GraphError("3.12.12 lattice: parameters must be at least 1");
    MultiGraph out;
    switch (bc) {
        case 'T': out = line_graph(subdivide_all(hex_torus(n, m).graph)).graph; break;
        case 'C': {
            CutHex cut = hex_cut_cylinder(n, m);
            out = line_graph(subdivide_except(cut.graph, cut.pendant_edges)).graph;
            break;
        }
        case 'F': {
            CutHex cut = hex_cut_free(n, m);
            out = line_graph(subdivide_except(cut.graph, cut.pendant_edges)).graph;
            break;
        }
        default: throw GraphError("3.12.12 lattice: boundary condition must be T, C or F");
    }
    if (out.num_vertices() != 6 * (m + 1) * (n + 1))
        throw std::logic_error("3.12.12 generator produced a wrong vertex count");
    return out;
}

MultiGraph gen_kagome(char bc, int n, int m) {
    if (n < 1 || m < 1) throw GraphError("kagome lattice: parameters must be at least 1");
    int a = n - 1, b = 2 * m - 1;
    MultiGraph out;
    switch (bc) {
        case 'T': out = line_graph(hex_torus(a, b).graph).graph; break;
        case 'C': {
            CutHex cut = hex_cut_cylinder(a, b);
            out = line_graph(delete_vertices(cut.graph, cut.outer_pendants).graph).graph;
            break;
        }
        case 'F': {
            CutHex cut = hex_cut_free(a, b);
            out = line_graph(delete_vertices(cut.graph, cut.outer_pendants).graph).graph;
            break;
        }
        default: throw GraphError("kagome lattice: boundary condition must be T, C or F");
    }
    if (out.num_vertices() != 6 * m * n)
        throw std::logic_error("kagome generator produced a wrong vertex count");
    return out;
}

MultiGraph gen_sierpinski_companion(int stage) {
    CompanionGraph c = sierpinski_companion(stage);
    long long p3 = 1;
    for (int k = 0; k < stage; ++k) p3 *= 3;
    long long expect_v = p3 + 3;
    long long expect_e = 3 * (p3 + 1) / 2;
    if (c.graph.num_vertices() != expect_v || c.graph.num_edges() != expect_e)
        throw std::logic_error("companion generator produced wrong counts");
    return c.graph;
}

MultiGraph gen_sierpinski(int stage) {
    MultiGraph companion = gen_sierpinski_companion(stage);
    MultiGraph out = line_graph(companion).graph;
    long long p3 = 1;
    for (int k = 0; k < stage; ++k) p3 *= 3;
    if (out.num_vertices() != 3 * (p3 + 1) / 2 || out.num_edges() != 3 * p3)
        throw std::logic_error("gasket generator produced wrong counts");
    return out;
}

MultiGraph generate(const LatticeSpec& spec) {
    switch (spec.family) {
        case Family::HexT: return gen_hex_torus(spec.n, spec.m);
        case Family::R_T: return gen_3_12_12('T', spec.n, spec.m);
        case Family::R_C: return gen_3_12_12('C', spec.n, spec.m);
        case Family::R_F: return gen_3_12_12('F', spec.n, spec.m);
        case Family::K_T: return gen_kagome('T', spec.n, spec.m);
        case Family::K_C: return gen_kagome('C', spec.n, spec.m);
        case Family::K_F: return gen_kagome('F', spec.n, spec.m);
        case Family::SG2: return gen_sierpinski(spec.stage);
        case Family::Gn: return gen_sierpinski_companion(spec.stage);
    }
    throw GraphError("unknown lattice family");
}

bool is_degenerate(const LatticeSpec& spec) {
    switch (spec.family) {
        case Family::HexT: return spec.n == 0 || spec.m == 0;
        case Family::K_T:
        case Family::K_C:
        case Family::K_F: return spec.n == 1;  // built on the n-1 torus
        default: return false;
    }
}

double entropy_limit_3_12_12() { return std::log(2.0) / 3.0; }
double entropy_limit_kagome() { return 2.0 * std::log(2.0) / 3.0; }
double entropy_limit_sierpinski() { return 2.0 * std::log(2.0) / 3.0; }
double entropy_limit_clique_inserted() { return std::log(2.0) / 3.0; }

FamilyPrediction predict(const LatticeSpec& spec) {
    long long n = spec.n, m = spec.m;
    auto grid_ok = [&] {
        if (n < 1 || m < 1) throw GraphError("prediction requires parameters at least 1");
    };
    switch (spec.family) {
        case Family::R_T:
            grid_ok();
            return {m * n + m + n + 2, entropy_limit_3_12_12(), "3(m+1)(n+1)"};
        case Family::R_C:
            grid_ok();
            return {m * n + m + 1, entropy_limit_3_12_12(), "3(m+1)(n+1)"};
        case Family::R_F:
            grid_ok();
            return {m * n, entropy_limit_3_12_12(), "3(m+1)(n+1)"};
        case Family::K_T:
            grid_ok();
            return {2 * m * n + 1, entropy_limit_kagome(), "vertices"};
        case Family::K_C:
            grid_ok();
            return {2 * m * n - n + 1, entropy_limit_kagome(), "vertices"};
        case Family::K_F:
            grid_ok();
            return {2 * m * n - 2 * m - n + 1, entropy_limit_kagome(), "vertices"};
        case Family::SG2: {
            if (spec.stage < 0) throw GraphError("prediction requires a non-negative stage");
            if (spec.stage > 39) throw GraphError("stage too large for a 64-bit exponent");
            if (spec.stage % 2 == 0)
                return {std::nullopt, entropy_limit_sierpinski(), "vertices (odd stages)"};
            long long p3 = 1;
            for (int k = 0; k < spec.stage; ++k) p3 *= 3;
            return {(p3 - 1) / 2, entropy_limit_sierpinski(), "vertices (odd stages)"};
        }
        case Family::HexT:
        case Family::Gn:
            throw GraphError(std::string("no closed-form prediction for family ") +
                             family_name(spec.family));
    }
    throw GraphError("unknown lattice family");
}

double log_mpz(const mpz_class& value) {
    if (value <= 0) throw GraphError("logarithm of a non-positive count");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double finite_entropy(const MultiGraph& g, const CountResult& count, EntropyNormalizer norm,
                      const LatticeSpec* spec) {
    if (count.value <= 0) throw GraphError("entropy requires a positive matching count");
    switch (norm) {
        case EntropyNormalizer::Vertices:
            return 2.0 * log_mpz(count.value) / static_cast<double>(g.num_vertices());
        case EntropyNormalizer::Paper3_12_12: {
            if (spec == nullptr)
                throw GraphError("the 3.12.12 normalizer needs the lattice parameters");
            double denom = 3.0 * (spec->m + 1) * (spec->n + 1);
            return log_mpz(count.value) / denom;
        }
    }
    throw GraphError("unknown entropy normalizer");
}

}  // namespace pmc
