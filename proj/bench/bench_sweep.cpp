// Compares the serial reference sweep against the OpenMP-parallel one on the
// same configuration and verifies the outputs are byte-identical.

#include <chrono>
#include <cstdio>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "satchoice/sweep.hpp"

using namespace satchoice;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string csv_of(const SweepResult& result) {
    std::ostringstream out;
    write_sweep_csv(result, out);
    return out.str();
}

}  // namespace

int main() {
    SweepConfig cfg;
    cfg.k = 3;
    cfg.t = 2;
    cfg.rule = ChoiceRule::most_positive();
    cfg.engine = SweepEngine::Bsc;
    cfg.n = 20000;
    cfg.grid = {4.0, 4.8, 0.2};
    cfg.trials = 48;
    cfg.seed = 20260823;

    std::printf("sweep benchmark: bsc, n=%d, %d trials x %zu densities\n", cfg.n, cfg.trials,
                cfg.grid.points().size());

    auto start = Clock::now();
    const SweepResult serial = run_sweep_serial(cfg);
    const double serial_time = seconds_since(start);
    std::printf("serial reference: %.2f s\n", serial_time);

    start = Clock::now();
    const SweepResult parallel = run_sweep(cfg);
    const double parallel_time = seconds_since(start);
#ifdef _OPENMP
    std::printf("openmp (%d threads): %.2f s, speedup %.2fx\n", omp_get_max_threads(),
                parallel_time, serial_time / parallel_time);
#else
    std::printf("openmp unavailable, parallel path ran serially: %.2f s\n", parallel_time);
#endif

    if (csv_of(serial) != csv_of(parallel)) {
        std::printf("MISMATCH: parallel output differs from serial reference\n");
        return 1;
    }
    std::printf("outputs identical\n");
    return 0;
}
