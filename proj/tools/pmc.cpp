// pmc: generate lattice families, count perfect matchings exactly, run the
// line-graph reduction engine, and sweep-verify the closed-form counts.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 resource cap, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "pmc/count.hpp"
#include "pmc/graph_io.hpp"
#include "pmc/lattices.hpp"
#include "pmc/linegraph.hpp"
#include "pmc/reduction.hpp"
#include "pmc/transforms.hpp"

namespace {

using nlohmann::ordered_json;

int env_width_cap() {
    if (const char* env = std::getenv("PMC_WIDTH_CAP")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 63) return v;
    }
    return pmc::kDefaultWidthCap;
}

pmc::MultiGraph read_input(const std::string& path) {
    if (path.empty() || path == "-") return pmc::read_graph_auto(std::cin, "<stdin>");
    return pmc::read_graph_file(path);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pmc::GraphError("cannot open " + path + " for writing");
    out << text;
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const std::string& flag) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw pmc::GraphError(flag + ": expected N or A..B, got \"" + text + "\"");
    }
    if (r.hi < r.lo) throw pmc::GraphError(flag + ": empty range \"" + text + "\"");
    return r;
}

pmc::Family parse_family(const std::string& name) {
    auto f = pmc::family_from_name(name);
    if (!f)
        throw pmc::GraphError("unknown family \"" + name +
                              "\" (hex-t, r-t, r-c, r-f, k-t, k-c, k-f, sg2, gn)");
    return *f;
}

bool takes_stage(pmc::Family f) { return f == pmc::Family::SG2 || f == pmc::Family::Gn; }

ordered_json graph_with_meta(const pmc::MultiGraph& g, ordered_json meta) {
    ordered_json j;
    j["meta"] = std::move(meta);
    ordered_json body = pmc::graph_to_json(g);
    j["num_vertices"] = body["num_vertices"];
    j["edges"] = std::move(body["edges"]);
    return j;
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    std::string family;
    int n = -1, m = -1, stage = -1;
    std::string out;
};

int run_gen(const GenArgs& a) {
    pmc::Family fam = parse_family(a.family);
    pmc::LatticeSpec spec{fam, a.n, a.m, a.stage};
    if (takes_stage(fam)) {
        if (a.stage < 0) throw pmc::GraphError("--stage is required for this family");
    } else {
        if (a.n < 0 || a.m < 0) throw pmc::GraphError("--n and --m are required for this family");
    }

    pmc::MultiGraph g = pmc::generate(spec);

    ordered_json meta;
    meta["family"] = pmc::family_name(fam);
    if (takes_stage(fam)) {
        meta["stage"] = spec.stage;
    } else {
        meta["n"] = spec.n;
        meta["m"] = spec.m;
    }
    try {
        pmc::FamilyPrediction p = pmc::predict(spec);
        if (p.pow2_exponent) {
            meta["predicted_pow2_exponent"] = *p.pow2_exponent;
            mpz_class v;
            mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(*p.pow2_exponent));
            meta["predicted_count"] = v.get_str();
        } else {
            meta["predicted_pow2_exponent"] = nullptr;
            meta["predicted_count"] = "0";
        }
        meta["entropy_limit"] = p.entropy_limit;
        meta["entropy_normalizer"] = p.normalizer;
    } catch (const pmc::GraphError&) {
        meta["predicted_pow2_exponent"] = nullptr;
        meta["predicted_count"] = nullptr;
    }
    if (pmc::is_degenerate(spec)) {
        meta["degenerate"] = true;
        std::cerr << "warning: degenerate parameters wrap onto parallel edges\n";
    }

    write_output(a.out, pmc::render_json(graph_with_meta(g, std::move(meta))));
    return 0;
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
    std::string in;
    std::string algo = "auto";
    std::string format = "plain";
    int width_cap = env_width_cap();
    bool force = false;
};

pmc::CountResult count_with_policy(const pmc::MultiGraph& g, const std::string& algo,
                                   int width_cap, bool force, std::string* chosen) {
    auto run_frontier = [&] {
        pmc::FrontierOptions opts;
        opts.width_cap = force ? 63 : width_cap;
        if (chosen) *chosen = "frontier";
        return pmc::count_frontier(g, opts);
    };
    auto run_brute = [&] {
        if (!force && g.num_vertices() > 36)
            throw pmc::ResourceLimitError(
                "brute-force guard: " + std::to_string(g.num_vertices()) +
                " vertices > 36 (use --force, or --algo frontier)");
        if (chosen) *chosen = "brute";
        return pmc::count_brute(g, {.memoize = true});
    };

    if (algo == "brute") return run_brute();
    if (algo == "frontier") return run_frontier();

    int width = 64;
    try {
        width = pmc::estimate_frontier_width(g);
    } catch (const pmc::ResourceLimitError&) {
    }
    if (width <= (force ? 63 : width_cap)) return run_frontier();
    if (g.num_vertices() <= 36 || force) return run_brute();
    throw pmc::ResourceLimitError(
        "estimated frontier width " + std::to_string(width) + " exceeds cap " +
        std::to_string(width_cap) + " and the graph is too large for the brute-force guard; "
        "raise PMC_WIDTH_CAP, pass --width-cap, or use --force");
}

int run_count(const CountArgs& a) {
    pmc::MultiGraph g = read_input(a.in);
    std::string chosen;
    pmc::CountResult r = count_with_policy(g, a.algo, a.width_cap, a.force, &chosen);
    if (a.format == "json") {
        ordered_json j;
        j["value"] = r.value.get_str();
        if (r.pow2_exponent)
            j["pow2_exponent"] = *r.pow2_exponent;
        else
            j["pow2_exponent"] = nullptr;
        j["algorithm"] = chosen;
        j["num_vertices"] = g.num_vertices();
        std::cout << pmc::render_json(j);
    } else {
        std::cout << r.value.get_str() << "\n";
    }
    return 0;
}

// ---- trace ---------------------------------------------------------------

struct TraceArgs {
    std::string in;
    std::string out;
    int check_steps = -1;
    bool pendant_fix = false;
};

int run_trace(const TraceArgs& a) {
    pmc::MultiGraph original = read_input(a.in);
    pmc::MultiGraph working = original;
    std::optional<pmc::PendantFixResult> fixed;
    if (a.pendant_fix) {
        fixed = pmc::pendant_fix_all(original);
        working = fixed->graph;
        if (!fixed->log.entries.empty())
            std::cout << "pendant fixes applied: " << fixed->log.entries.size() << "\n";
    }

    std::optional<int> check;
    if (a.check_steps >= 0) check = a.check_steps;
    pmc::ReductionTrace trace = pmc::reduce(working, check);

    std::cout << "M(L(G)) = 2^" << *trace.claimed.pow2_exponent << ", k = n/2+1, n = "
              << trace.degree3_count << "\n";
    if (check) {
        size_t verified = 0, total = 0;
        for (const pmc::TraceNode& node : trace.nodes)
            if (node.check) {
                ++total;
                verified += node.check->verified;
            }
        std::cout << "checked steps: " << verified << "/" << trace.nodes.size()
                  << " brute-verified (" << total - verified << " failed)\n";
    }

    if (!a.out.empty()) {
        ordered_json j = pmc::trace_to_json(trace);
        if (fixed) {
            j["input"] = pmc::graph_to_json(original);
            auto pre = ordered_json::array();
            for (const auto& entry : fixed->log.entries) {
                pre.push_back({{"rule", "Claim1"},
                               {"pendant", entry.pendant},
                               {"parallel_fix", entry.parallel_fix},
                               {"before_digest", pmc::digest_hex(entry.before_digest)},
                               {"after_digest", pmc::digest_hex(entry.after_digest)}});
            }
            j["preprocessing"] = std::move(pre);
        }
        write_output(a.out, pmc::render_json(j));
        std::cout << "trace written to " << a.out << "\n";
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> families;
    std::string n_range = "1..2";
    std::string m_range = "1..2";
    std::string stage_range = "0..3";
    std::string algo = "auto";
    std::string format = "csv";
    int width_cap = env_width_cap();
    bool force = false;
};

struct VerifyRow {
    std::string family;
    int n = 0;
    bool has_m = false;
    int m = 0;
    pmc::LatticeSpec spec;
    std::optional<long long> predicted_exponent;
    std::string predicted_value;
    std::string counted_value;  // empty on resource cap
    std::string algorithm;
    std::string agree;  // yes | no | cap
    long elapsed_ms = 0;
};

int run_verify(const VerifyArgs& a) {
    if (a.families.empty()) throw pmc::GraphError("verify: at least one --family is required");

    std::vector<VerifyRow> rows;
    for (const std::string& name : a.families) {
        pmc::Family fam = parse_family(name);
        if (fam == pmc::Family::HexT || fam == pmc::Family::Gn)
            throw pmc::GraphError(std::string("verify: no closed-form prediction for ") +
                                  pmc::family_name(fam));
        if (takes_stage(fam)) {
            Range r = parse_range(a.stage_range, "--stage");
            for (int s = r.lo; s <= r.hi; ++s) {
                VerifyRow row;
                row.family = pmc::family_name(fam);
                row.n = s;
                row.spec = pmc::LatticeSpec{fam, 0, 0, s};
                rows.push_back(row);
            }
        } else {
            Range rn = parse_range(a.n_range, "--n");
            Range rm = parse_range(a.m_range, "--m");
            for (int n = rn.lo; n <= rn.hi; ++n)
                for (int m = rm.lo; m <= rm.hi; ++m) {
                    VerifyRow row;
                    row.family = pmc::family_name(fam);
                    row.n = n;
                    row.has_m = true;
                    row.m = m;
                    row.spec = pmc::LatticeSpec{fam, n, m, 0};
                    rows.push_back(row);
                }
        }
    }

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
        VerifyRow& row = rows[i];
        auto start = std::chrono::steady_clock::now();
        try {
            pmc::FamilyPrediction p = pmc::predict(row.spec);
            row.predicted_exponent = p.pow2_exponent;
            mpz_class predicted = 0;
            if (p.pow2_exponent)
                mpz_ui_pow_ui(predicted.get_mpz_t(), 2,
                              static_cast<unsigned long>(*p.pow2_exponent));
            row.predicted_value = predicted.get_str();

            pmc::MultiGraph g = pmc::generate(row.spec);
            std::string chosen;
            pmc::CountResult c = count_with_policy(g, a.algo, a.width_cap, a.force, &chosen);
            row.counted_value = c.value.get_str();
            row.algorithm = chosen;
            row.agree = c.value == predicted ? "yes" : "no";
        } catch (const pmc::ResourceLimitError&) {
            row.agree = "cap";
        }
        row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }

    int disagreements = 0, capped = 0;
    for (const VerifyRow& row : rows) {
        disagreements += row.agree == "no";
        capped += row.agree == "cap";
    }

    if (a.format == "json") {
        ordered_json out;
        auto arr = ordered_json::array();
        for (const VerifyRow& row : rows) {
            ordered_json r;
            r["family"] = row.family;
            r["n"] = row.n;
            if (row.has_m)
                r["m"] = row.m;
            else
                r["m"] = nullptr;
            if (row.predicted_exponent)
                r["predicted_exponent"] = *row.predicted_exponent;
            else
                r["predicted_exponent"] = nullptr;
            r["predicted_value"] = row.predicted_value;
            r["counted_value"] = row.counted_value.empty() ? ordered_json(nullptr)
                                                           : ordered_json(row.counted_value);
            r["algorithm"] = row.algorithm;
            r["agree"] = row.agree;
            r["elapsed_ms"] = row.elapsed_ms;
            arr.push_back(std::move(r));
        }
        out["rows"] = std::move(arr);
        out["summary"] = {{"total", rows.size()},
                          {"agree", rows.size() - disagreements - capped},
                          {"disagree", disagreements},
                          {"capped", capped}};
        std::cout << pmc::render_json(out);
    } else {
        std::cout << "family,n,m,predicted_exponent,predicted_value,counted_value,algorithm,"
                     "agree,elapsed_ms\n";
        for (const VerifyRow& row : rows) {
            std::cout << row.family << ',' << row.n << ',';
            if (row.has_m) std::cout << row.m;
            std::cout << ',';
            if (row.predicted_exponent) std::cout << *row.predicted_exponent;
            std::cout << ',' << row.predicted_value << ',' << row.counted_value << ','
                      << row.algorithm << ',' << row.agree << ',' << row.elapsed_ms << "\n";
        }
        std::cerr << "verify: " << rows.size() - disagreements - capped << " agree, "
                  << disagreements << " disagree, " << capped << " capped\n";
    }
    return disagreements > 0 ? 1 : 0;
}

// ---- entropy ----------------------------------------------------------------

struct EntropyArgs {
    std::vector<std::string> families;
    std::string sizes = "1..3";
    int width_cap = env_width_cap();
};

int run_entropy(const EntropyArgs& a) {
    if (a.families.empty()) throw pmc::GraphError("entropy: at least one --family is required");
    Range sizes = parse_range(a.sizes, "--sizes");

    std::cout << "family,n,m,vertices,entropy_closed_form,entropy_counted,limit\n";
    std::cout.setf(std::ios::fixed);
    std::cout.precision(12);
    double ln2 = std::log(2.0);

    for (const std::string& name : a.families) {
        pmc::Family fam = parse_family(name);
        if (fam == pmc::Family::HexT || fam == pmc::Family::Gn)
            throw pmc::GraphError(std::string("entropy: no closed form for ") +
                                  pmc::family_name(fam));
        for (int k = sizes.lo; k <= sizes.hi; ++k) {
            pmc::LatticeSpec spec{fam, k, k, k};
            pmc::FamilyPrediction p = pmc::predict(spec);
            bool stage_family = takes_stage(fam);

            std::cout << pmc::family_name(fam) << ',' << k << ','
                      << (stage_family ? std::string() : std::to_string(k)) << ',';
            pmc::MultiGraph g = pmc::generate(spec);
            std::cout << g.num_vertices() << ',';

            if (!p.pow2_exponent || *p.pow2_exponent == 0) {
                // count 0 or 1: no positive entropy to report
                std::cout << ",," << p.entropy_limit << "\n";
                continue;
            }
            bool paper_norm = fam == pmc::Family::R_T || fam == pmc::Family::R_C ||
                              fam == pmc::Family::R_F;
            double closed = paper_norm
                                ? static_cast<double>(*p.pow2_exponent) * ln2 /
                                      (3.0 * (k + 1) * (k + 1))
                                : 2.0 * static_cast<double>(*p.pow2_exponent) * ln2 /
                                      g.num_vertices();
            std::cout << closed << ',';
            try {
                pmc::FrontierOptions opts;
                opts.width_cap = a.width_cap;
                pmc::CountResult c = pmc::count_frontier(g, opts);
                double counted = pmc::finite_entropy(
                    g, c,
                    paper_norm ? pmc::EntropyNormalizer::Paper3_12_12
                               : pmc::EntropyNormalizer::Vertices,
                    &spec);
                std::cout << counted;
            } catch (const pmc::ResourceLimitError&) {
            }
            std::cout << ',' << p.entropy_limit << "\n";
        }
    }
    return 0;
}

// ---- structural helpers ----------------------------------------------------

struct LineGraphArgs {
    std::string in, out;
    bool origin = false;
};

int run_linegraph(const LineGraphArgs& a) {
    pmc::MultiGraph g = read_input(a.in);
    pmc::LineGraphResult r = pmc::line_graph(g);
    ordered_json meta;
    meta["construction"] = "line-graph";
    meta["source_vertices"] = g.num_vertices();
    if (a.origin) meta["origin_edge"] = r.origin_edge;
    write_output(a.out, pmc::render_json(graph_with_meta(r.graph, std::move(meta))));
    return 0;
}

struct SubdivideArgs {
    std::string in, out;
    bool all = false;
    int edge = -1;
    int times = 1;
};

int run_subdivide(const SubdivideArgs& a) {
    pmc::MultiGraph g = read_input(a.in);
    pmc::MultiGraph out;
    ordered_json meta;
    if (a.all) {
        out = pmc::subdivide_all(g);
        meta["construction"] = "full-subdivision";
    } else {
        if (a.edge < 0) throw pmc::GraphError("subdivide: pass --all or --edge E [--times T]");
        out = pmc::subdivide_edge(g, a.edge, a.times).graph;
        meta["construction"] = "edge-subdivision";
        meta["edge"] = a.edge;
        meta["times"] = a.times;
    }
    write_output(a.out, pmc::render_json(graph_with_meta(out, std::move(meta))));
    return 0;
}

struct PendantFixArgs {
    std::string in, out;
};

int run_pendant_fix(const PendantFixArgs& a) {
    pmc::MultiGraph g = read_input(a.in);
    pmc::PendantFixResult r = pmc::pendant_fix_all(g);
    ordered_json meta;
    meta["construction"] = "pendant-fix";
    meta["pendant_reductions"] = r.log.entries.size();
    int parallel = 0;
    for (const auto& e : r.log.entries) parallel += e.parallel_fix;
    meta["parallel_fixes"] = parallel;
    write_output(a.out, pmc::render_json(graph_with_meta(r.graph, std::move(meta))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact perfect matching counts for line graphs and lattice families"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a lattice instance as canonical JSON");
    cgen->add_option("--family", gen.family, "family name")->required();
    cgen->add_option("--n", gen.n, "first grid parameter");
    cgen->add_option("--m", gen.m, "second grid parameter");
    cgen->add_option("--stage", gen.stage, "stage for sg2/gn");
    cgen->add_option("--out", gen.out, "output path (default stdout)");

    CountArgs count;
    auto* ccount = app.add_subcommand("count", "count perfect matchings of a graph file");
    ccount->add_option("--in", count.in, "input path or - for stdin");
    ccount->add_option("--algo", count.algo, "auto|brute|frontier")
        ->check(CLI::IsMember({"auto", "brute", "frontier"}));
    ccount->add_option("--format", count.format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));
    ccount->add_option("--width-cap", count.width_cap, "frontier width cap");
    ccount->add_flag("--force", count.force, "override the size guards");

    TraceArgs trace;
    auto* ctrace = app.add_subcommand("trace", "reduce an instance and emit a certified trace");
    ctrace->add_option("--in", trace.in, "input path or - for stdin");
    ctrace->add_option("--check-steps", trace.check_steps,
                       "brute-verify every step with at most N vertices");
    ctrace->add_option("--out", trace.out, "write the trace JSON here");
    ctrace->add_flag("--pendant-fix", trace.pendant_fix,
                     "exhaust pendant reductions before validating");

    VerifyArgs verify;
    auto* cverify = app.add_subcommand("verify", "sweep families against the closed forms");
    cverify->add_option("--family", verify.families, "family (repeatable)");
    cverify->add_option("--n", verify.n_range, "n range A..B (default 1..2)");
    cverify->add_option("--m", verify.m_range, "m range A..B (default 1..2)");
    cverify->add_option("--stage", verify.stage_range, "stage range A..B (default 0..3)");
    cverify->add_option("--algo", verify.algo, "auto|brute|frontier")
        ->check(CLI::IsMember({"auto", "brute", "frontier"}));
    cverify->add_option("--format", verify.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cverify->add_option("--width-cap", verify.width_cap, "frontier width cap");
    cverify->add_flag("--force", verify.force, "override the size guards");

    EntropyArgs entropy;
    auto* centropy = app.add_subcommand("entropy", "finite-size entropies and analytic limits");
    centropy->add_option("--family", entropy.families, "family (repeatable)");
    centropy->add_option("--sizes", entropy.sizes, "diagonal sizes or stages A..B");
    centropy->add_option("--width-cap", entropy.width_cap, "frontier width cap");

    LineGraphArgs lg;
    auto* clg = app.add_subcommand("linegraph", "construct the line graph of a graph file");
    clg->add_option("--in", lg.in, "input path or - for stdin");
    clg->add_option("--out", lg.out, "output path (default stdout)");
    clg->add_flag("--origin", lg.origin, "include the vertex-to-source-edge map");

    SubdivideArgs sub;
    auto* csub = app.add_subcommand("subdivide", "subdivide one edge or every edge");
    csub->add_option("--in", sub.in, "input path or - for stdin");
    csub->add_option("--out", sub.out, "output path (default stdout)");
    csub->add_flag("--all", sub.all, "subdivide every edge once");
    csub->add_option("--edge", sub.edge, "edge id to subdivide");
    csub->add_option("--times", sub.times, "number of fresh vertices to insert");

    PendantFixArgs pfix;
    auto* cpfix = app.add_subcommand("pendant-fix", "exhaust pendant reductions");
    cpfix->add_option("--in", pfix.in, "input path or - for stdin");
    cpfix->add_option("--out", pfix.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cgen) return run_gen(gen);
        if (*ccount) return run_count(count);
        if (*ctrace) return run_trace(trace);
        if (*cverify) return run_verify(verify);
        if (*centropy) return run_entropy(entropy);
        if (*clg) return run_linegraph(lg);
        if (*csub) return run_subdivide(sub);
        if (*cpfix) return run_pendant_fix(pfix);
    } catch (const pmc::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const pmc::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
