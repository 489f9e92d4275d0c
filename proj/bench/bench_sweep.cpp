// Benchmark: the serial reference loops against the OpenMP kernels, on the
// pool verification sweep and the corollary equivalence sweep.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "wakes/sweep.hpp"

using namespace wakes;

namespace {

template <typename F>
double time_best(F&& f, int repeats) {
    double best = 1e100;
    for (int i = 0; i < repeats; ++i) {
        auto start = std::chrono::steady_clock::now();
        f();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                 start)
                       .count();
        if (s < best) best = s;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP sweep benchmark"};
    uint32_t max_period = 8;
    uint32_t corollary_period = 5;
    uint64_t grid = 1023;
    int repeats = 3;
    int jobs = 0;
    app.add_option("--max-period", max_period, "pool depth for the verify sweep");
    app.add_option("--corollary-period", corollary_period,
                   "component period cap for the corollary sweep");
    app.add_option("--grid", grid, "angle grid denominator for the corollary sweep");
    app.add_option("--repeats", repeats, "repetitions, best time wins");
    app.add_option("--jobs", jobs, "threads for the parallel kernels (0 = all)");
    CLI11_PARSE(app, argc, argv);

    if (jobs <= 0) jobs = omp_get_max_threads();
    std::printf("pool build (period <= %u)...\n", max_period);
    ComponentPool pool = pair_periodic_angles(max_period);
    std::printf("%zu components, %d threads\n\n", pool.components.size(), jobs);

    size_t serial_failures = 0, parallel_failures = 0;
    double vs = time_best(
        [&] { serial_failures = sweep_verify_serial(pool).failure_count(); }, repeats);
    double vp = time_best(
        [&] { parallel_failures = sweep_verify_parallel(pool, jobs).failure_count(); },
        repeats);
    std::printf("verify sweep      serial %.3f s   openmp %.3f s   speedup %.2fx   "
                "(failures: %zu/%zu)\n",
                vs, vp, vs / vp, serial_failures, parallel_failures);

    std::vector<Angle> angles = angle_grid(grid);
    CorollaryCounts cs, cp;
    double ss = time_best(
        [&] { cs = sweep_corollary_serial(pool, corollary_period, angles); }, repeats);
    double sp = time_best(
        [&] { cp = sweep_corollary_parallel(pool, corollary_period, angles, jobs); },
        repeats);
    std::printf("corollary sweep   serial %.3f s   openmp %.3f s   speedup %.2fx   "
                "(%zu pairs)\n",
                ss, sp, ss / sp, cs.pairs);

    bool agree = cs.pairs == cp.pairs && cs.disc_hits == cp.disc_hits &&
                 cs.exceptional == cp.exceptional &&
                 cs.equivalence_failures == cp.equivalence_failures &&
                 cs.difference_failures == cp.difference_failures &&
                 cs.parse_errors == cp.parse_errors &&
                 serial_failures == parallel_failures;
    std::printf("serial and parallel results %s\n", agree ? "agree" : "DISAGREE");
    return agree ? 0 : 1;
}
