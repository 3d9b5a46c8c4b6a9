#include "pmc/reduction.hpp"

#include <algorithm>

#include "pmc/linegraph.hpp"
#include "pmc/transforms.hpp"

namespace pmc {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::BaseCycle: return "BaseCycle";
        case Rule::Parity22: return "Parity22";
        case Rule::Parity23: return "Parity23";
        case Rule::Case1_1: return "Case1_1";
        case Rule::Case1_2_1a: return "Case1_2_1a";
        case Rule::Case1_2_1b: return "Case1_2_1b";
        case Rule::Case1_2_2: return "Case1_2_2";
        case Rule::Case2_1: return "Case2_1";
        case Rule::Case2_2_analog: return "Case2_2_analog";
        case Rule::Claim1: return "Claim1";
        case Rule::ComponentProduct: return "ComponentProduct";
    }
    return "?";
}

TheoremInstance validate_instance(const MultiGraph& g) {
    if (g.num_vertices() == 0) throw GraphError("instance rejected: graph is empty");
    int n3 = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        int d = g.degrees()[v];
        if (d != 2 && d != 3)
            throw GraphError("instance rejected: vertex " + std::to_string(v) + " has degree " +
                             std::to_string(d) + ", outside {2,3}");
        if (d == 3) ++n3;
    }
    if (!is_connected(g)) throw GraphError("instance rejected: graph is disconnected");
    if (g.num_edges() % 2 != 0)
        throw GraphError("instance rejected: edge count " + std::to_string(g.num_edges()) +
                         " is odd");
    if (n3 % 2 != 0) throw std::logic_error("degree-3 count is odd despite even edge count");
    return TheoremInstance{g, n3};
}

std::optional<ReductionSite> find_reduction_site(const TheoremInstance& inst) {
    const MultiGraph& g = inst.graph;
    if (inst.degree3_count == 0) return std::nullopt;

    VertexId u = -1;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degrees()[v] == 3) {
            u = v;
            break;
        }

    // sorted deduplicated neighbors for deterministic breadth-first search
    std::vector<std::vector<VertexId>> nbrs(static_cast<size_t>(g.num_vertices()));
    for (const Edge& e : g.edges()) {
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
    }
    for (auto& list : nbrs) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
    std::vector<VertexId> parent(static_cast<size_t>(g.num_vertices()), -1);
    std::vector<VertexId> queue = {u};
    dist[u] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        for (VertexId w : nbrs[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
    }

    VertexId target = -1;
    for (VertexId v : queue)  // breadth-first order: nearest first, then lowest id
        if (v != u && g.degrees()[v] == 3) {
            target = v;
            break;
        }
    if (target == -1) throw std::logic_error("no second degree-3 vertex reachable");

    ReductionSite site;
    for (VertexId v = target; v != -1; v = parent[v]) site.path.push_back(v);
    std::reverse(site.path.begin(), site.path.end());
    site.anchor = u;
    return site;
}

namespace {

Rewrite delete_edge(const MultiGraph& g, EdgeId victim) {
    Rewrite r;
    r.vertex_map.resize(static_cast<size_t>(g.num_vertices()));
    for (VertexId v = 0; v < g.num_vertices(); ++v) r.vertex_map[v] = v;
    r.edge_map.assign(static_cast<size_t>(g.num_edges()), -1);
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        if (i == victim) continue;
        r.edge_map[i] = static_cast<EdgeId>(edges.size());
        edges.push_back(g.edge(i));
    }
    r.graph = MultiGraph(g.num_vertices(), std::move(edges));
    return r;
}

MultiGraph append_edge(const MultiGraph& g, VertexId a, VertexId b) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back(Edge{a, b});
    return MultiGraph(g.num_vertices(), std::move(edges));
}

std::vector<int> component_labels(const MultiGraph& g) {
    std::vector<int> label(static_cast<size_t>(g.num_vertices()), -1);
    Adjacency adj = build_adjacency(g);
    int next = 0;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        std::vector<VertexId> stack = {s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj.at[v]) {
                (void)e;
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

struct Claim1Result {
    MultiGraph graph;
    bool parallel_fix;
};

Claim1Result claim1_auto(const MultiGraph& g, VertexId pendant) {
    const Edge* pe = nullptr;
    for (const Edge& e : g.edges())
        if (e.touches(pendant)) pe = &e;
    if (pe == nullptr) throw std::logic_error("claim1_auto: vertex has no incident edge");
    VertexId nbr = pe->other(pendant);
    VertexId a = -1, b = -1;
    for (const Edge& e : g.edges()) {
        if (!e.touches(nbr) || e.touches(pendant)) continue;
        (a == -1 ? a : b) = e.other(nbr);
    }
    if (a == b) {
        MultiGraph fixed = multi_pendant_fix(g, pendant).graph;
        return {pendant_reduce(fixed, pendant).graph, true};
    }
    return {pendant_reduce(g, pendant).graph, false};
}

TheoremInstance check_successor(const MultiGraph& g) {
    try {
        return validate_instance(g);
    } catch (const GraphError& e) {
        throw std::logic_error(std::string("reduction produced an invalid successor: ") +
                               e.what());
    }
}

EdgeId lowest_edge_between(const MultiGraph& g, VertexId a, VertexId b) {
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        if (g.edge(i).same_endpoints(Edge{a, b})) return i;
    return -1;
}

}  // namespace

ParityStep normalize_parity(const TheoremInstance& inst, const ReductionSite& site) {
    if (site.interior() < 2)
        throw GraphError("normalize_parity requires at least two interior path vertices");
    const MultiGraph& g = inst.graph;
    Rule rule = site.interior() % 2 == 0 ? Rule::Parity22 : Rule::Parity23;

    Rewrite del = delete_vertices(g, {site.path[1], site.path[2]});
    MultiGraph out =
        append_edge(del.graph, del.vertex_map[site.path[0]], del.vertex_map[site.path[3]]);

    ReductionSite next;
    next.anchor = del.vertex_map[site.anchor];
    next.path.push_back(del.vertex_map[site.path[0]]);
    for (size_t i = 3; i < site.path.size(); ++i) next.path.push_back(del.vertex_map[site.path[i]]);
    return ParityStep{check_successor(out), std::move(next), rule};
}

CaseResult apply_case(const TheoremInstance& inst, const ReductionSite& site) {
    const MultiGraph& g = inst.graph;
    int j = site.interior();
    if (j != 0 && j != 1)
        throw GraphError("apply_case requires an interior count of 0 or 1, got " +
                         std::to_string(j));
    VertexId u = site.path.front();
    VertexId v = site.path.back();
    if (g.degrees()[u] != 3 || g.degrees()[v] != 3)
        throw GraphError("apply_case: site endpoints must both have degree 3");

    if (j == 0) {
        int mult = g.multiplicity(u, v);
        if (mult >= 3)
            throw std::logic_error("triple edge between site endpoints in a valid instance");
        if (mult == 2) {
            // keep u, drop v, reroute v's remaining edge to u
            EdgeId third = -1;
            for (EdgeId i = 0; i < g.num_edges(); ++i)
                if (g.edge(i).touches(v) && !g.edge(i).touches(u)) third = i;
            VertexId hook = g.edge(third).other(v);
            Rewrite del = delete_vertices(g, {v});
            MultiGraph out = append_edge(del.graph, del.vertex_map[u], del.vertex_map[hook]);
            return CaseResult{Rule::Case1_1, 2, {check_successor(out)}};
        }

        EdgeId e1 = lowest_edge_between(g, u, v);
        std::vector<EdgeId> all_bridges = bridges(g);
        bool cut = std::binary_search(all_bridges.begin(), all_bridges.end(), e1);
        if (cut) {
            Rewrite cutg = delete_edge(g, e1);
            std::vector<int> label = component_labels(cutg.graph);
            int edges_u = 0;
            for (const Edge& e : cutg.graph.edges())
                if (label[e.u] == label[u]) ++edges_u;

            // The even-edge component continues on its own; the odd one
            // keeps the opposite endpoint as a pendant and shrinks by the
            // pendant reduction.
            VertexId pendant = edges_u % 2 == 0 ? u : v;
            int even_side = edges_u % 2 == 0 ? label[u] : label[v];

            std::vector<VertexId> victims;
            for (VertexId w = 0; w < g.num_vertices(); ++w)
                if (label[w] != even_side) victims.push_back(w);
            Rewrite even_part = delete_vertices(cutg.graph, victims);

            victims.clear();
            for (VertexId w = 0; w < g.num_vertices(); ++w)
                if (label[w] == even_side && w != pendant) victims.push_back(w);
            Rewrite odd_part = delete_vertices(g, victims);
            Claim1Result reduced = claim1_auto(odd_part.graph, odd_part.vertex_map[pendant]);

            CaseResult r{reduced.parallel_fix ? Rule::Case1_2_1b : Rule::Case1_2_1a,
                         1,
                         {},
                         reduced.parallel_fix};
            r.successors.push_back(check_successor(even_part.graph));
            r.successors.push_back(check_successor(reduced.graph));
            return r;
        }

        // no cut: drop v and its edges, bridge v's two other endpoints
        std::vector<EdgeId> others;
        for (EdgeId i = 0; i < g.num_edges(); ++i)
            if (g.edge(i).touches(v) && i != e1) others.push_back(i);
        VertexId a = g.edge(others[0]).other(v);
        VertexId b = g.edge(others[1]).other(v);
        Rewrite noedge = delete_edge(g, e1);
        Rewrite del = delete_vertices(noedge.graph, {v});
        MultiGraph out;
        if (a != b) {
            out = append_edge(del.graph, del.vertex_map[a], del.vertex_map[b]);
        } else {
            // a bare edge would be a loop; keep a doubly subdivided one
            VertexId w = del.vertex_map[a];
            std::vector<Edge> edges(del.graph.edges().begin(), del.graph.edges().end());
            VertexId x1 = del.graph.num_vertices();
            VertexId x2 = del.graph.num_vertices() + 1;
            edges.push_back(Edge{w, x1});
            edges.push_back(Edge{x1, x2});
            edges.push_back(Edge{x2, w});
            out = MultiGraph(del.graph.num_vertices() + 2, std::move(edges));
        }
        return CaseResult{Rule::Case1_2_2, 2, {check_successor(out)}};
    }

    // j == 1: path u - mid - v
    VertexId mid = site.path[1];
    if (g.multiplicity(u, v) >= 1) {
        // With a direct edge present, dropping the interior vertex halves
        // the count. The double-edge special graph closes this way: its
        // successor is the 2-cycle, worth 2, so the whole trace says 4.
        Rewrite del = delete_vertices(g, {mid});
        return CaseResult{Rule::Case2_1, 2, {check_successor(del.graph)}};
    }

    Rewrite del = delete_vertices(g, {mid});
    std::vector<int> label = component_labels(del.graph);
    if (label[del.vertex_map[u]] == label[del.vertex_map[v]])
        return CaseResult{Rule::Case2_2_analog, 2, {check_successor(del.graph)}};

    // the interior vertex was a cut vertex: the count splits as a product
    int side_u = label[del.vertex_map[u]];
    int edges_u = 0;
    for (const Edge& e : del.graph.edges())
        if (label[e.u] == side_u) ++edges_u;

    CaseResult r{Rule::ComponentProduct, 1, {}, false};
    if (edges_u % 2 == 0) {
        for (VertexId endpoint : {u, v}) {
            int side = label[del.vertex_map[endpoint]];
            std::vector<VertexId> victims;
            for (VertexId w = 0; w < del.graph.num_vertices(); ++w)
                if (label[w] != side) victims.push_back(w);
            Rewrite part = delete_vertices(del.graph, victims);
            r.successors.push_back(check_successor(part.graph));
        }
    } else {
        // both sides odd: each keeps the interior vertex as a pendant,
        // removed by the pendant reduction
        for (VertexId endpoint : {u, v}) {
            int side = label[del.vertex_map[endpoint]];
            std::vector<VertexId> victims;
            for (VertexId w = 0; w < g.num_vertices(); ++w) {
                if (w == mid) continue;
                if (label[del.vertex_map[w]] == side) continue;
                victims.push_back(w);
            }
            Rewrite part = delete_vertices(g, victims);
            Claim1Result reduced = claim1_auto(part.graph, part.vertex_map[mid]);
            r.parallel_fix = r.parallel_fix || reduced.parallel_fix;
            r.successors.push_back(check_successor(reduced.graph));
        }
    }
    return r;
}

namespace {

struct TraceBuilder {
    std::optional<int> check_up_to;
    std::vector<TraceNode> nodes;

    static mpz_class brute_of_line_graph(const MultiGraph& g) {
        return count_brute(line_graph(g).graph).value;
    }

    void maybe_check(size_t idx) {
        TraceNode& node = nodes[idx];
        if (!check_up_to || node.before.num_vertices() > *check_up_to) return;
        StepCheck check;
        check.lhs = brute_of_line_graph(node.before);
        check.rhs = node.multiplier;
        for (size_t child : node.children)
            check.rhs *= brute_of_line_graph(nodes[child].before);
        check.verified = check.lhs == check.rhs;
        node.check = check;
        if (!check.verified)
            throw std::logic_error("step verification failed at digest " +
                                   digest_hex(node.before_digest) + " (rule " +
                                   rule_name(node.rule) + ")");
    }

    size_t build(TheoremInstance inst, std::optional<ReductionSite> site) {
        size_t idx = nodes.size();
        nodes.push_back(TraceNode{});
        nodes[idx].before = inst.graph;
        nodes[idx].before_digest = graph_digest(inst.graph);
        nodes[idx].site = site;

        if (!site) {
            nodes[idx].rule = Rule::BaseCycle;
            nodes[idx].multiplier = 2;
        } else if (site->interior() >= 2) {
            ParityStep p = normalize_parity(inst, *site);
            nodes[idx].rule = p.rule;
            nodes[idx].multiplier = 1;
            size_t child = build(std::move(p.instance), std::move(p.site));
            nodes[idx].children.push_back(child);
        } else {
            CaseResult c = apply_case(inst, *site);
            nodes[idx].rule = c.rule;
            nodes[idx].multiplier = c.multiplier;
            nodes[idx].parallel_fix = c.parallel_fix;
            for (TheoremInstance& succ : c.successors) {
                std::optional<ReductionSite> next = find_reduction_site(succ);
                size_t child = build(std::move(succ), std::move(next));
                nodes[idx].children.push_back(child);
            }
        }
        maybe_check(idx);
        return idx;
    }
};

mpz_class node_value(const std::vector<TraceNode>& nodes, size_t idx) {
    mpz_class v = nodes[idx].multiplier;
    for (size_t child : nodes[idx].children) v *= node_value(nodes, child);
    return v;
}

}  // namespace

ReductionTrace reduce(const MultiGraph& g, std::optional<int> check_steps_up_to) {
    TheoremInstance root = validate_instance(g);

    ReductionTrace trace;
    trace.root = g;
    trace.degree3_count = root.degree3_count;

    TraceBuilder builder;
    builder.check_up_to = check_steps_up_to;
    std::optional<ReductionSite> site = find_reduction_site(root);
    builder.build(std::move(root), std::move(site));
    trace.nodes = std::move(builder.nodes);

    mpz_class total = node_value(trace.nodes, 0);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2,
                  static_cast<unsigned long>(trace.degree3_count / 2 + 1));
    if (total != expected)
        throw std::logic_error("trace value disagrees with the claimed exponent");

    trace.claimed = CountResult{std::move(total), std::nullopt, CountAlgorithm::Brute};
    verify_power_of_two(trace.claimed);
    return trace;
}

nlohmann::ordered_json trace_to_json(const ReductionTrace& trace) {
    nlohmann::ordered_json j;
    j["format"] = "pmc-trace-v1";
    j["digest_algorithm"] =
        "fnv1a64 over num_vertices then the sorted (lo,hi) endpoint pairs, 4 LE bytes per id";
    j["root"] = nlohmann::ordered_json{{"num_vertices", trace.root.num_vertices()}};
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : trace.root.edges()) edges.push_back({e.u, e.v});
    j["root"]["edges"] = std::move(edges);
    j["degree3_count"] = trace.degree3_count;
    j["claimed_count"] = trace.claimed.value.get_str();
    if (trace.claimed.pow2_exponent)
        j["claimed_pow2_exponent"] = *trace.claimed.pow2_exponent;

    auto steps = nlohmann::ordered_json::array();
    for (size_t i = 0; i < trace.nodes.size(); ++i) {
        const TraceNode& node = trace.nodes[i];
        nlohmann::ordered_json s;
        s["id"] = i;
        s["rule"] = rule_name(node.rule);
        s["before_digest"] = digest_hex(node.before_digest);
        if (node.site) {
            s["site"] = {{"anchor", node.site->anchor}, {"path", node.site->path}};
        } else {
            s["site"] = nullptr;
        }
        s["multiplier"] = node.multiplier;
        if (node.parallel_fix) s["parallel_fix"] = true;
        s["successors"] = node.children;
        auto after = nlohmann::ordered_json::array();
        for (size_t child : node.children)
            after.push_back(digest_hex(trace.nodes[child].before_digest));
        s["after_digests"] = std::move(after);
        if (node.check) {
            s["check"] = {{"verified", node.check->verified},
                          {"lhs", node.check->lhs.get_str()},
                          {"rhs", node.check->rhs.get_str()}};
        } else {
            s["check"] = nullptr;
        }
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

}  // namespace pmc
