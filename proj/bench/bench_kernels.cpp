// Serial vs OpenMP timings for the three data-parallel kernels.
// Usage: bench_kernels [repeats]   (FRACINEQ_THREADS caps the parallel side)

#include "fracineq/funcatalog.hpp"
#include "fracineq/harness.hpp"
#include "fracineq/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace fracineq;

namespace {

// Best of `repeats` wall-clock runs, in milliseconds.
double best_ms(int repeats, const std::function<void()>& run) {
    double best = INFINITY;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        run();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

volatile double sink = 0.0;

void row(const char* name, int repeats, const std::function<void(Execution)>& kernel) {
    const double serial = best_ms(repeats, [&] { kernel(Execution::Serial); });
    const double parallel = best_ms(repeats, [&] { kernel(Execution::Parallel); });
    std::printf("%-28s %12.2f %12.2f %9.2fx\n", name, serial, parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("threads: %d, repeats: %d\n", worker_threads(), repeats);
    std::printf("%-28s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

    const Function1D f = catalog_entry("power_1_75").function;
    row("certify 65^3 grid", repeats, [&](Execution exec) {
        CertifyOptions opts;
        opts.grid_size = 65;
        opts.exec = exec;
        sink = certify(f, 0.5, 2.0, ConvexityMode::SConvex, CertTarget::AbsDerivPow, opts).max_violation;
    });

    row("midpoint oracle 1e6 panels", repeats, [&](Execution exec) {
        sink = quad::midpoint_estimate([](double t) { return std::exp(-t) * std::cos(3 * t); }, 0.0, 1.0,
                                       quad::kOraclePanels, exec)
                   .value;
    });

    const SweepConfig cfg = SweepConfig::defaults();
    row("default sweep", repeats, [&](Execution exec) { sink = run_sweep(cfg, exec).summary.worst_margin; });
    return 0;
}
