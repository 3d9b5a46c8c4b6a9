// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact except the 1e-12 entropy comparisons.
// The randomized corpora are seeded; override with --seed N to explore.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "pmc/count.hpp"
#include "pmc/lattices.hpp"
#include "pmc/linegraph.hpp"
#include "pmc/reduction.hpp"
#include "pmc/transforms.hpp"
#include "support/corpus.hpp"

using namespace pmc;
using namespace pmc::testsupport;

namespace {

struct Outcome {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

struct Registry {
    std::map<std::uint64_t, MultiGraph> instances;

    void add(const MultiGraph& g) { instances.emplace(graph_digest(g), g); }
};

mpz_class pow2(unsigned long k) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, k);
    return v;
}

struct Check {
    bool ok = true;
    std::string first_failure;
    long long checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

Check criterion1_theorem_suite(Rng& rng, Registry& registry) {
    Check c;
    for (int it = 0; it < 300; ++it) {
        MultiGraph g = random_degree23_graph(rng, 14);
        TheoremInstance inst = validate_instance(g);
        MultiGraph lg = line_graph(g).graph;
        registry.add(lg);

        mpz_class counted = count_brute(lg).value;
        mpz_class claimed = pow2(static_cast<unsigned long>(inst.degree3_count / 2 + 1));
        c.expect(counted == claimed,
                 "instance " + std::to_string(it) + ": brute M(L(G)) != 2^(n/2+1)");

        ReductionTrace trace = reduce(g, 64);
        c.expect(trace.claimed.value == counted,
                 "instance " + std::to_string(it) + ": reduce() disagrees with brute force");
        for (const TraceNode& node : trace.nodes) {
            c.expect(node.check.has_value() && node.check->verified,
                     "instance " + std::to_string(it) + ": unverified step");
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    return c;
}

Check criterion2_lemma_suite(Rng& rng, Registry& registry) {
    Check c;
    auto mm = [&](const MultiGraph& g) {
        registry.add(g);
        return count_brute(g, {.memoize = true}).value;
    };
    auto mml = [&](const MultiGraph& g) { return mm(line_graph(g).graph); };

    // vertex splitting preserves M
    for (int it = 0; it < 200; ++it) {
        MultiGraph g = random_multigraph(rng, 12, 18);
        std::uniform_int_distribution<VertexId> pick(0, g.num_vertices() - 1);
        VertexId u = pick(rng);
        SplitSpec spec{u, {}, {}};
        for (EdgeId i = 0; i < g.num_edges(); ++i)
            if (g.edge(i).touches(u)) (rng() & 1 ? spec.side_x : spec.side_y).push_back(i);
        c.expect(mm(split_vertex(g, spec).graph) == mm(g),
                 "split_vertex changed M at iteration " + std::to_string(it));
        if (!c.ok) return c;
    }

    // even subdivision preserves M and M(L(.))
    for (int done = 0; done < 200;) {
        MultiGraph g = random_multigraph(rng, 10, 14);
        std::uniform_int_distribution<EdgeId> pick(0, g.num_edges() - 1);
        EdgeId e = pick(rng);
        if (g.degree(g.edge(e).u) < 2 || g.degree(g.edge(e).v) < 2) continue;
        int s = 1 + static_cast<int>(rng() % 2);
        MultiGraph sub = subdivide_edge(g, e, 2 * s).graph;
        c.expect(mm(sub) == mm(g), "even subdivision changed M");
        c.expect(mml(sub) == mml(g), "even subdivision changed M(L(.))");
        if (!c.ok) return c;
        ++done;
    }

    // odd subdivisions are mutually equivalent
    for (int done = 0; done < 200;) {
        MultiGraph g = random_multigraph(rng, 9, 13);
        std::uniform_int_distribution<EdgeId> pick(0, g.num_edges() - 1);
        EdgeId e = pick(rng);
        if (g.degree(g.edge(e).u) < 2 || g.degree(g.edge(e).v) < 2) continue;
        c.expect(mml(subdivide_edge(g, e, 1).graph) == mml(subdivide_edge(g, e, 3).graph),
                 "odd subdivision equivalence failed");
        if (!c.ok) return c;
        ++done;
    }

    // pendant reduction preserves M(L(.))
    for (int done = 0; done < 200;) {
        VertexId pendant = -1;
        MultiGraph g = random_pendant_site_graph(rng, pendant, 12);
        MultiGraph after;
        try {
            after = pendant_reduce(g, pendant).graph;
        } catch (const GraphError&) {
            after = pendant_reduce(multi_pendant_fix(g, pendant).graph, pendant).graph;
        }
        c.expect(mml(after) == mml(g), "pendant reduction changed M(L(.))");
        if (!c.ok) return c;
        ++done;
    }
    return c;
}

Check criterion3_lattice_sweep(Registry& registry) {
    Check c;
    auto counted_equals = [&](const MultiGraph& g, std::optional<long long> expo,
                              const std::string& what) {
        registry.add(g);
        CountResult r = count_frontier(g);
        mpz_class expected = expo ? pow2(static_cast<unsigned long>(*expo)) : mpz_class(0);
        c.expect(r.value == expected, what);
    };

    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m) {
            std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            counted_equals(gen_3_12_12('T', n, m),
                           predict({Family::R_T, n, m, 0}).pow2_exponent, "R^T" + at);
            counted_equals(gen_3_12_12('C', n, m),
                           predict({Family::R_C, n, m, 0}).pow2_exponent, "R^C" + at);
            counted_equals(gen_3_12_12('F', n, m),
                           predict({Family::R_F, n, m, 0}).pow2_exponent, "R^F" + at);
            counted_equals(gen_kagome('T', n, m), predict({Family::K_T, n, m, 0}).pow2_exponent,
                           "K^T" + at);
            counted_equals(gen_kagome('C', n, m), predict({Family::K_C, n, m, 0}).pow2_exponent,
                           "K^C" + at);
            counted_equals(gen_kagome('F', n, m), predict({Family::K_F, n, m, 0}).pow2_exponent,
                           "K^F" + at);
        }

    for (int stage = 0; stage <= 3; ++stage)
        counted_equals(gen_sierpinski(stage), predict({Family::SG2, 0, 0, stage}).pow2_exponent,
                       "SG2(" + std::to_string(stage) + ")");
    return c;
}

Check criterion4_special_values(Registry& registry) {
    Check c;
    MultiGraph g = k4();
    registry.add(g);
    c.expect(count_brute(g).value == 3, "M(K4) != 3");

    MultiGraph lk4 = line_graph(g).graph;
    registry.add(lk4);
    c.expect(count_brute(lk4).value == 8, "M(L(K4)) != 8");

    MultiGraph ci = clique_inserted(g);
    registry.add(ci);
    c.expect(ci.num_vertices() == 12, "clique-inserted K4 is not on 12 vertices");
    c.expect(count_brute(ci, {.memoize = true}).value == pow2(4 / 2 + 1),
             "M(clique-inserted K4) != 2^3");
    return c;
}

Check criterion5_cross_validation(const Registry& registry) {
    Check c;
    for (const auto& [digest, g] : registry.instances) {
        CountResult b = count_brute(g, {.memoize = true});
        FrontierOptions opts;
        opts.width_cap = 63;
        CountResult f = count_frontier(g, opts);
        c.expect(b.value == f.value,
                 "counters disagree on instance " + digest_hex(digest) + " (" +
                     std::to_string(g.num_vertices()) + " vertices)");
        if (!c.ok) break;
    }
    return c;
}

Check criterion6_entropy(Registry& registry) {
    Check c;
    double ln2 = std::log(2.0);
    auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };

    c.expect(near(entropy_limit_3_12_12(), ln2 / 3.0), "3.12.12 limit is not (1/3)ln2");
    c.expect(near(entropy_limit_kagome(), 2.0 * ln2 / 3.0), "kagome limit is not (2/3)ln2");
    c.expect(near(entropy_limit_sierpinski(), 2.0 * ln2 / 3.0), "gasket limit is not (2/3)ln2");
    c.expect(near(entropy_limit_clique_inserted(), ln2 / 3.0),
             "clique-inserted limit is not (1/3)ln2");

    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m) {
            for (Family f : {Family::R_T, Family::R_C, Family::R_F}) {
                LatticeSpec spec{f, n, m, 0};
                MultiGraph g = generate(spec);
                registry.add(g);
                FamilyPrediction p = predict(spec);
                if (*p.pow2_exponent == 0) continue;
                CountResult counted = count_frontier(g);
                double from_count =
                    finite_entropy(g, counted, EntropyNormalizer::Paper3_12_12, &spec);
                double closed =
                    static_cast<double>(*p.pow2_exponent) * ln2 / (3.0 * (m + 1) * (n + 1));
                c.expect(near(from_count, closed), std::string(family_name(f)) +
                                                       ": counted entropy differs from closed form");
                c.expect(near(p.entropy_limit, ln2 / 3.0), "3.12.12 family limit mismatch");
            }
            for (Family f : {Family::K_T, Family::K_C, Family::K_F}) {
                LatticeSpec spec{f, n, m, 0};
                MultiGraph g = generate(spec);
                registry.add(g);
                FamilyPrediction p = predict(spec);
                if (*p.pow2_exponent == 0) continue;
                CountResult counted = count_frontier(g);
                double from_count = finite_entropy(g, counted, EntropyNormalizer::Vertices);
                double closed =
                    2.0 * static_cast<double>(*p.pow2_exponent) * ln2 / g.num_vertices();
                c.expect(near(from_count, closed), std::string(family_name(f)) +
                                                       ": counted entropy differs from closed form");
                c.expect(near(p.entropy_limit, 2.0 * ln2 / 3.0), "kagome family limit mismatch");
            }
        }

    for (int stage : {1, 3}) {
        LatticeSpec spec{Family::SG2, 0, 0, stage};
        MultiGraph g = generate(spec);
        registry.add(g);
        CountResult counted = count_frontier(g);
        double from_count = finite_entropy(g, counted, EntropyNormalizer::Vertices);
        double closed = 2.0 * static_cast<double>(*predict(spec).pow2_exponent) * ln2 /
                        g.num_vertices();
        c.expect(near(from_count, closed), "SG2: counted entropy differs from closed form");
    }
    return c;
}

Check criterion7_recognition(Rng& rng) {
    Check c;
    for (int it = 0; it < 50; ++it) {
        MultiGraph g = random_cubic_multigraph(rng, 12);
        Recognition rec = recognize_cubic_line_graph(clique_inserted(g));
        c.expect(rec.kind == Recognition::Kind::CliqueInserted,
                 "round trip failed to recognize at iteration " + std::to_string(it));
        if (!c.ok) break;
        c.expect(degree_census(*rec.preimage) == degree_census(g),
                 "preimage census mismatch at iteration " + std::to_string(it));
        c.expect(rec.preimage->num_edges() == g.num_edges(),
                 "preimage edge count mismatch at iteration " + std::to_string(it));
        if (!c.ok) break;
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20250809;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::stoull(argv[++i]);
        } else {
            std::cerr << "usage: pmc_acceptance [--seed N]\n";
            return 2;
        }
    }

    std::vector<Outcome> outcomes;
    Registry registry;
    Rng rng(seed);

    auto run = [&](int id, const std::string& name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        Check c;
        std::string error;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.first_failure = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::ostringstream detail;
        detail << c.checks << " checks";
        if (!c.ok) detail << "; " << c.first_failure;
        outcomes.push_back({id, name, c.ok, detail.str(), secs});
    };

    run(1, "Theorem 2.4 property suite (300 seeded instances, steps brute-verified)",
        [&] { return criterion1_theorem_suite(rng, registry); });
    run(2, "count-preserving rewrites (4 x 200 seeded instances, exact)",
        [&] { return criterion2_lemma_suite(rng, registry); });
    run(3, "lattice formula sweep (exact, zero tolerance)",
        [&] { return criterion3_lattice_sweep(registry); });
    run(4, "special values: K4, L(K4), clique-inserted K4",
        [&] { return criterion4_special_values(registry); });
    run(5, "counter cross-validation over every instance above",
        [&] { return criterion5_cross_validation(registry); });
    run(6, "entropy closed forms and analytic limits (1e-12)",
        [&] { return criterion6_entropy(registry); });
    run(7, "recognition round-trip (50 seeded cubic multigraphs)",
        [&] { return criterion7_recognition(rng); });

    bool all = true;
    for (const Outcome& o : outcomes) {
        all = all && o.pass;
        std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", o.pass ? "PASS" : "FAIL", o.id,
                    o.name.c_str(), o.detail.c_str(), o.seconds);
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
