#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "pmc/count.hpp"
#include "pmc/multigraph.hpp"

namespace pmc {

// Validated input for the reduction engine: connected, every degree 2 or
// 3, even edge count. degree3_count (always even) drives the claimed
// exponent degree3_count/2 + 1.
struct TheoremInstance {
    MultiGraph graph;
    int degree3_count = 0;
};

// Distinct diagnostics for: empty graph, degree out of {2,3},
// disconnected, odd edge count.
TheoremInstance validate_instance(const MultiGraph& g);

// A reduction site: a degree-3 anchor u and a shortest path to the
// nearest other degree-3 vertex; every interior vertex has degree 2.
struct ReductionSite {
    VertexId anchor;
    std::vector<VertexId> path;  // path.front() == anchor
    int interior() const { return static_cast<int>(path.size()) - 2; }
};

// nullopt iff the instance has no degree-3 vertex (it is an even cycle
// and reduces by the base rule). Deterministic: lowest-id degree-3
// anchor, breadth-first shortest path with ascending-id tie-breaking.
std::optional<ReductionSite> find_reduction_site(const TheoremInstance& inst);

enum class Rule {
    BaseCycle,
    Parity22,
    Parity23,
    Case1_1,
    Case1_2_1a,
    Case1_2_1b,
    Case1_2_2,
    Case2_1,
    Case2_2_analog,
    Claim1,
    ComponentProduct,
};

const char* rule_name(Rule r);

// Shortens the site's interior path by two (undoing one even subdivision;
// M(L(.)) is unchanged). Requires interior() >= 2; the rule tag records
// whether the interior count was even (target 0) or odd (target 1).
struct ParityStep {
    TheoremInstance instance;
    ReductionSite site;
    Rule rule;  // Parity22 or Parity23
};
ParityStep normalize_parity(const TheoremInstance& inst, const ReductionSite& site);

// One application of the case analysis at a site with interior() in
// {0,1}. Successor instances are strictly smaller in degree-3 count and
// each passes validate_instance (a failure is an engine bug and raises
// logic_error, never a user error).
//
//   Case1_1, Case2_1, Case1_2_2, Case2_2_analog: one successor, x2
//   Case1_2_1a/b, ComponentProduct (cut sites):  two successors, x1
//
// The two-parallel-edges graph at an interior-1 site reduces by Case2_1
// to the 2-cycle, so its trace closes at count 4.
struct CaseResult {
    Rule rule;
    unsigned multiplier;
    std::vector<TheoremInstance> successors;
    bool parallel_fix = false;  // a pendant fix needed double subdivision
};
CaseResult apply_case(const TheoremInstance& inst, const ReductionSite& site);

// Optional per-step numeric check: both sides counted by brute force.
struct StepCheck {
    bool verified;
    mpz_class lhs;  // M(L(before))
    mpz_class rhs;  // multiplier * product over successors of M(L(succ))
};

struct TraceNode {
    Rule rule;
    MultiGraph before;
    std::uint64_t before_digest;
    std::optional<ReductionSite> site;  // absent for BaseCycle
    unsigned multiplier;
    bool parallel_fix = false;
    std::vector<size_t> children;  // indices into ReductionTrace::nodes
    std::optional<StepCheck> check;
};

// Certified derivation of M(L(root)) = 2^(degree3_count/2 + 1). The value
// of a node is its multiplier times the product of its children's values;
// the root value is the claimed count.
struct ReductionTrace {
    MultiGraph root;
    int degree3_count = 0;
    std::vector<TraceNode> nodes;  // node 0 is the root step, preorder
    CountResult claimed;
};

// Runs the full reduction. With check_steps_up_to = N, every step whose
// before-graph has at most N vertices is verified by brute-force counting
// of both sides; a failed check aborts with the offending step digest.
// Inputs with degree-1 vertices are rejected; exhaust pendant_fix_all
// first.
ReductionTrace reduce(const MultiGraph& g, std::optional<int> check_steps_up_to = {});

nlohmann::ordered_json trace_to_json(const ReductionTrace& trace);

}  // namespace pmc
