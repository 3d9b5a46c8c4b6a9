#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "pmc/multigraph.hpp"

namespace pmc {

enum class CountAlgorithm { Brute, Frontier };

// Exact perfect-matching count. pow2_exponent is set iff value is an exact
// power of two; value is 0 whenever the counted graph has an odd number of
// vertices.
struct CountResult {
    mpz_class value;
    std::optional<unsigned long> pow2_exponent;
    CountAlgorithm algorithm = CountAlgorithm::Brute;
};

// Sets pow2_exponent on c (k if value == 2^k exactly, absent otherwise,
// including for value 0) and returns it.
std::optional<unsigned long> verify_power_of_two(CountResult& c);

struct BruteOptions {
    // Off by default: graphs are usually rewritten between calls and an
    // unmemoized oracle is easier to audit. Turn on for large instances
    // with repeated subproblems (lattices).
    bool memoize = false;
};

// Reference counter. Recursive branching: pick a minimum-degree unmatched
// vertex (lowest id on ties), branch over its incident edges with parallel
// edges branching separately, and recurse on the graph minus both
// endpoints. The empty graph counts 1; an isolated vertex prunes to 0.
// Supports up to 64 vertices; may be slow above ~34.
CountResult count_brute(const MultiGraph& g, const BruteOptions& opts = {});

inline constexpr int kDefaultWidthCap = 26;

struct FrontierOptions {
    // Vertex elimination order; empty selects a breadth-first order from
    // the lowest vertex id with ascending-id tie-breaking.
    std::vector<VertexId> order;
    // Maximum number of live frontier slots before giving up with a
    // ResourceLimitError (never a wrong answer). Hard ceiling 63.
    int width_cap = kDefaultWidthCap;
    // OpenMP expansion of large state tables. The result is independent of
    // this flag: per-state contributions are exact integers and addition
    // commutes, so any merge order yields identical counts.
    bool parallel = true;
};

// Frontier dynamic programming over a vertex elimination order: a state is
// the subset of current-frontier vertices already matched; a vertex must be
// matched by the time it leaves the frontier; parallel edges contribute
// multiplicatively. Agrees with count_brute on every input.
CountResult count_frontier(const MultiGraph& g, const FrontierOptions& opts = {});

// The order count_frontier uses when none is given.
std::vector<VertexId> default_elimination_order(const MultiGraph& g);

// Width (max live slots) the frontier DP would need for this order; empty
// order means the default one. Cheap: no states are materialized.
int estimate_frontier_width(const MultiGraph& g, std::vector<VertexId> order = {});

}  // namespace pmc
