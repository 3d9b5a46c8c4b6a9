#include "pmc/count.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include <omp.h>

namespace pmc {

std::optional<unsigned long> verify_power_of_two(CountResult& c) {
    if (c.value > 0 && mpz_popcount(c.value.get_mpz_t()) == 1)
        c.pow2_exponent = mpz_sizeinbase(c.value.get_mpz_t(), 2) - 1;
    else
        c.pow2_exponent.reset();
    return c.pow2_exponent;
}

namespace {

struct BruteState {
    std::vector<std::vector<VertexId>> nbrs;  // one entry per edge copy
    bool memoize = false;
    std::unordered_map<std::uint64_t, mpz_class> memo;

    mpz_class rec(std::uint64_t alive) {
        if (alive == 0) return 1;
        if (memoize) {
            auto it = memo.find(alive);
            if (it != memo.end()) return it->second;
        }
        // minimum-degree alive vertex, lowest id on ties
        int best = -1;
        int best_deg = 0;
        for (std::uint64_t rest = alive; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = 0;
            for (VertexId w : nbrs[v])
                if (alive >> w & 1) ++d;
            if (best == -1 || d < best_deg) {
                best = v;
                best_deg = d;
                if (d == 0) break;
            }
        }
        if (best_deg == 0) return 0;
        mpz_class total = 0;
        for (VertexId w : nbrs[best])
            if (alive >> w & 1)
                total += rec(alive & ~(1ULL << best) & ~(1ULL << w));
        if (memoize) memo.emplace(alive, total);
        return total;
    }
};

}  // namespace

CountResult count_brute(const MultiGraph& g, const BruteOptions& opts) {
    if (g.num_vertices() > 64)
        throw ResourceLimitError("brute-force counter supports at most 64 vertices, got " +
                                 std::to_string(g.num_vertices()));
    BruteState st;
    st.memoize = opts.memoize;
    st.nbrs.resize(static_cast<size_t>(g.num_vertices()));
    for (const Edge& e : g.edges()) {
        st.nbrs[e.u].push_back(e.v);
        st.nbrs[e.v].push_back(e.u);
    }
    std::uint64_t all = g.num_vertices() == 64 ? ~0ULL : (1ULL << g.num_vertices()) - 1;
    CountResult r{st.rec(all), std::nullopt, CountAlgorithm::Brute};
    verify_power_of_two(r);
    return r;
}

std::vector<VertexId> default_elimination_order(const MultiGraph& g) {
    Adjacency adj = build_adjacency(g);
    std::vector<std::vector<VertexId>> sorted_nbrs(adj.at.size());
    for (size_t v = 0; v < adj.at.size(); ++v) {
        for (auto [w, e] : adj.at[v]) {
            (void)e;
            sorted_nbrs[v].push_back(w);
        }
        std::sort(sorted_nbrs[v].begin(), sorted_nbrs[v].end());
        sorted_nbrs[v].erase(std::unique(sorted_nbrs[v].begin(), sorted_nbrs[v].end()),
                             sorted_nbrs[v].end());
    }
    std::vector<VertexId> order;
    order.reserve(static_cast<size_t>(g.num_vertices()));
    std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::vector<VertexId> queue = {s};
        for (size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            order.push_back(v);
            for (VertexId w : sorted_nbrs[v])
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

namespace {

struct FrontierPlan {
    std::vector<VertexId> order;
    int width = 0;

    // Per processing step: slot given to the new vertex, matchable
    // (slot, multiplicity) pairs among already-slotted neighbors, and the
    // mask of slots retired after the step.
    struct Step {
        int slot;
        std::vector<std::pair<int, int>> match;
        std::uint64_t retire_mask;
    };
    std::vector<Step> steps;
};

FrontierPlan plan_frontier(const MultiGraph& g, std::vector<VertexId> order, int width_cap) {
    if (order.empty()) order = default_elimination_order(g);
    size_t n = static_cast<size_t>(g.num_vertices());
    if (order.size() != n) throw GraphError("elimination order has wrong length");
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        if (v < 0 || static_cast<size_t>(v) >= n || pos[v] != -1)
            throw GraphError("elimination order is not a permutation of the vertices");
        pos[v] = static_cast<int>(i);
    }
    if (width_cap > 63) width_cap = 63;
    if (width_cap < 1) width_cap = 1;

    Adjacency adj = build_adjacency(g);
    std::vector<int> remaining(n, 0);
    for (size_t v = 0; v < n; ++v) remaining[v] = g.degrees()[v];

    FrontierPlan plan;
    plan.order = order;
    plan.steps.reserve(n);
    std::vector<int> slot_of(n, -1);
    std::uint64_t free_slots = ~0ULL;
    int in_use = 0;

    for (size_t t = 0; t < n; ++t) {
        VertexId v = order[t];
        FrontierPlan::Step step;

        if (in_use + 1 > width_cap)
            throw ResourceLimitError("frontier width exceeds cap " + std::to_string(width_cap) +
                                     " at vertex " + std::to_string(v));
        step.slot = std::countr_zero(free_slots);
        free_slots &= ~(1ULL << step.slot);
        slot_of[v] = step.slot;
        ++in_use;
        plan.width = std::max(plan.width, in_use);

        // group processed-neighbor edges by slot
        std::vector<int> mult_by_slot(64, 0);
        for (auto [w, e] : adj.at[v]) {
            (void)e;
            if (pos[w] < static_cast<int>(t)) {
                ++mult_by_slot[slot_of[w]];
                --remaining[w];
                --remaining[v];
            }
        }
        for (int s = 0; s < 64; ++s)
            if (mult_by_slot[s] > 0) step.match.emplace_back(s, mult_by_slot[s]);

        // retire v and any neighbor that just lost its last unprocessed edge
        step.retire_mask = 0;
        auto maybe_retire = [&](VertexId x) {
            if (slot_of[x] >= 0 && remaining[x] == 0) {
                step.retire_mask |= 1ULL << slot_of[x];
                free_slots |= 1ULL << slot_of[x];
                slot_of[x] = -1;
                --in_use;
            }
        };
        maybe_retire(v);
        for (auto [w, e] : adj.at[v]) {
            (void)e;
            maybe_retire(w);
        }
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

using StateMap = std::unordered_map<std::uint64_t, mpz_class>;

void expand_into(StateMap& out, std::uint64_t mask, const mpz_class& cnt,
                 const FrontierPlan::Step& step) {
    std::uint64_t vbit = 1ULL << step.slot;
    auto emit = [&](std::uint64_t m, const mpz_class& c, int mult) {
        if ((m & step.retire_mask) != step.retire_mask) return;  // unmatched retiree
        std::uint64_t key = m & ~step.retire_mask;
        if (mult == 1)
            out[key] += c;
        else
            out[key] += c * mult;
    };
    emit(mask, cnt, 1);  // new vertex left unmatched for now
    for (auto [s, mult] : step.match) {
        std::uint64_t sbit = 1ULL << s;
        if (mask & sbit) continue;  // neighbor already matched
        emit(mask | sbit | vbit, cnt, mult);
    }
}

}  // namespace

int estimate_frontier_width(const MultiGraph& g, std::vector<VertexId> order) {
    return plan_frontier(g, std::move(order), 63).width;
}

CountResult count_frontier(const MultiGraph& g, const FrontierOptions& opts) {
    FrontierPlan plan = plan_frontier(g, opts.order, opts.width_cap);

    StateMap states;
    states.emplace(0, 1);
    constexpr size_t kParallelThreshold = 4096;

    for (const auto& step : plan.steps) {
        StateMap next;
        next.reserve(states.size() * 2);
        if (opts.parallel && states.size() >= kParallelThreshold && omp_get_max_threads() > 1) {
            std::vector<std::pair<std::uint64_t, mpz_class>> items;
            items.reserve(states.size());
            for (auto& [m, c] : states) items.emplace_back(m, std::move(c));
#pragma omp parallel
            {
                StateMap local;
#pragma omp for schedule(static) nowait
                for (long i = 0; i < static_cast<long>(items.size()); ++i)
                    expand_into(local, items[i].first, items[i].second, step);
#pragma omp critical(pmc_frontier_merge)
                for (auto& [m, c] : local) next[m] += c;
            }
        } else {
            for (const auto& [m, c] : states) expand_into(next, m, c, step);
        }
        states = std::move(next);
        if (states.empty()) break;  // every branch died; count is 0
    }

    mpz_class total = 0;
    for (const auto& [m, c] : states) {
        if (m != 0) throw std::logic_error("frontier DP finished with live slots");
        total += c;
    }
    CountResult r{std::move(total), std::nullopt, CountAlgorithm::Frontier};
    verify_power_of_two(r);
    return r;
}

}  // namespace pmc
