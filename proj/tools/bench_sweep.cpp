#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "donoghue/sweep.hpp"

namespace {

double time_ms(std::vector<donoghue::CurvePoint> (*kernel)(double, double, double, int),
               double a, int steps, int reps) {
    using clock = std::chrono::steady_clock;
    volatile double sink = 0.0;
    const auto t0 = clock::now();
    for (int r = 0; r < reps; ++r) {
        const auto pts = kernel(a, -100.0, 100.0, steps);
        sink = sink + pts[static_cast<std::size_t>(steps) / 2].kappa;
    }
    const auto t1 = clock::now();
    (void)sink;
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    const int steps = argc > 1 ? std::atoi(argv[1]) : 2000001;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    std::printf("kappa(Q) sweep, %d grid points, best-effort average over %d reps\n", steps,
                reps);
    for (const double a : {1.0, 0.5, 4.0}) {
        const double t_serial = time_ms(donoghue::kappa_curve_serial, a, steps, reps);
        const double t_parallel = time_ms(donoghue::kappa_curve_parallel, a, steps, reps);
        std::printf("a = %4.1f  serial %8.2f ms  parallel %8.2f ms  speedup %.2fx\n", a,
                    t_serial, t_parallel, t_serial / t_parallel);
    }
    return 0;
}
