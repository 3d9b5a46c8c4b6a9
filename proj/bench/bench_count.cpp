// Timing comparison of the counters on lattice instances: memoized
// brute-force branching vs the frontier DP, serial and OpenMP. All three
// must report identical counts; the table prints milliseconds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "pmc/count.hpp"
#include "pmc/lattices.hpp"

using namespace pmc;

namespace {

double ms(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct Row {
    std::string name;
    MultiGraph graph;
};

}  // namespace

int main() {
    std::vector<Row> rows;
    rows.push_back({"k-t(2,2)   24v", gen_kagome('T', 2, 2)});
    rows.push_back({"r-t(1,1)   24v", gen_3_12_12('T', 1, 1)});
    rows.push_back({"r-t(2,1)   36v", gen_3_12_12('T', 2, 1)});
    rows.push_back({"sg2(3)     42v", gen_sierpinski(3)});
    rows.push_back({"k-t(3,3)   54v", gen_kagome('T', 3, 3)});
    rows.push_back({"r-t(2,2)   54v", gen_3_12_12('T', 2, 2)});
    rows.push_back({"k-t(4,4)   96v", gen_kagome('T', 4, 4)});

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-16s %14s %12s %14s %14s\n", "instance", "count", "brute-ms",
                "frontier-1t-ms", "frontier-mt-ms");

    for (const Row& row : rows) {
        CountResult serial, parallel, brute;
        bool brute_ok = row.graph.num_vertices() <= 54;

        FrontierOptions sopts;
        sopts.parallel = false;
        sopts.width_cap = 40;
        double t_serial = ms([&] { serial = count_frontier(row.graph, sopts); });

        FrontierOptions popts;
        popts.parallel = true;
        popts.width_cap = 40;
        double t_parallel = ms([&] { parallel = count_frontier(row.graph, popts); });

        double t_brute = -1;
        if (brute_ok)
            t_brute = ms([&] { brute = count_brute(row.graph, {.memoize = true}); });

        if (serial.value != parallel.value ||
            (brute_ok && brute.value != serial.value)) {
            std::printf("%-16s COUNTERS DISAGREE\n", row.name.c_str());
            return 1;
        }
        char brute_col[32];
        if (brute_ok)
            std::snprintf(brute_col, sizeof brute_col, "%12.1f", t_brute);
        else
            std::snprintf(brute_col, sizeof brute_col, "%12s", "-");
        std::printf("%-16s %14s %s %14.1f %14.1f\n", row.name.c_str(),
                    serial.value.get_str().c_str(), brute_col, t_serial, t_parallel);
    }
    return 0;
}
