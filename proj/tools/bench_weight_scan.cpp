// Compares the serial reference weight-distribution scan against the
// OpenMP-parallel one on the heavier catalog screens, checking that the
// verdicts agree while timing both paths.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilrad/catalog.hpp"
#include "nilrad/levi.hpp"

using namespace nilrad;
using clock_type = std::chrono::steady_clock;

namespace {

double run_case(const GradedAlgebra& graded, const IrrepAssignment& a, bool parallel, int repeat,
                WeightVerdict* verdict, long* checked) {
    WeightScreenOptions opts;
    opts.parallel = parallel;
    opts.max_distributions = 200000;
    auto t0 = clock_type::now();
    for (int r = 0; r < repeat; ++r) {
        WeightScreenResult res = weight_screen(graded, a, opts);
        *verdict = res.verdict;
        *checked = res.distributions_checked;
    }
    auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count() / repeat;
}

} // namespace

int main(int argc, char** argv) {
    int repeat = argc > 1 ? std::atoi(argv[1]) : 3;
    std::vector<std::string> ids = {"A_6_13", "A_6_14p", "A_6_15", "A_6_18",
                                    "heisenberg(3)", "heisenberg(4)", "heisenberg(5)"};
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not available, parallel path falls back to serial\n";
#endif
    std::cout << "algebra            assignment      dists     serial[s]   parallel[s]  speedup\n";
    bool mismatch = false;
    for (const auto& id : ids) {
        CatalogEntry entry = catalog_lookup(id);
        GradedAlgebra graded = associated_graded(entry.table);
        auto assignments = enumerate_irrep_assignments(graded, LeviFactor::sl2);
        for (const auto& a : assignments) {
            WeightVerdict vs = WeightVerdict::undecided, vp = WeightVerdict::undecided;
            long checked = 0;
            double ts = run_case(graded, a, false, repeat, &vs, &checked);
            double tp = run_case(graded, a, true, repeat, &vp, &checked);
            if (vs != vp) mismatch = true;
            std::string layers;
            for (size_t k = 0; k < a.per_layer.size(); ++k) {
                layers += k ? "|" : "";
                for (size_t i = 0; i < a.per_layer[k].size(); ++i)
                    layers += (i ? "+" : "") + std::to_string(a.per_layer[k][i]);
            }
            std::printf("%-18s %-15s %8ld  %10.6f  %10.6f  %7.2f%s\n", id.c_str(), layers.c_str(),
                        checked, ts, tp, tp > 0 ? ts / tp : 0.0, vs != vp ? "  MISMATCH" : "");
        }
    }
    if (mismatch) {
        std::cout << "verdict mismatch between serial and parallel scans\n";
        return 1;
    }
    return 0;
}
