#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "satchoice/choice.hpp"
#include "satchoice/stats.hpp"

namespace satchoice {

enum class SweepEngine { Uc, Buc, Sc, Bsc, Dpll, TwoSat };

SweepEngine parse_sweep_engine(const std::string& name);  // uc|buc|sc|bsc|dpll|2sat
std::string sweep_engine_name(SweepEngine e);

struct DensityGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.1;

    std::vector<double> points() const;
};

struct SweepConfig {
    int k = 3;
    int t = 1;
    ChoiceRule rule;
    std::optional<int> ell;  // reduce each clause to its ell most positive literals
    SweepEngine engine = SweepEngine::Buc;
    int n = 1000;
    DensityGrid grid;
    int trials = 100;
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = all hardware threads
    std::uint64_t dpll_budget = 50'000'000;

    void check() const;
    std::string to_json() const;
    static SweepConfig from_json(const std::string& text);
};

struct DensityResult {
    double alpha = 0.0;
    long trials = 0;
    long successes = 0;
    long indeterminate = 0;  // engine budget exhausted; neither success nor failure
    double rate() const;
    WilsonInterval wilson() const;
};

struct SweepResult {
    SweepConfig config;
    std::vector<DensityResult> densities;
};

// Per-trial RNG streams are derived from (seed, density index, trial index),
// so results are identical at any worker count. The parallel version uses
// OpenMP when available; the serial one is the reference it is tested against.
SweepResult run_sweep(const SweepConfig& cfg);
SweepResult run_sweep_serial(const SweepConfig& cfg);

// Runs one trial of the configured pipeline; exposed for the benchmark.
// Returns 1 success, 0 failure, -1 indeterminate.
int run_trial(const SweepConfig& cfg, std::size_t density_index, double alpha, long trial);

// Linear interpolation of the first 0.5 crossing of the success rate.
std::optional<double> estimate_transition(const SweepResult& result);

// CSV: alpha,trials,successes,rate,ci_low,ci_high[,indeterminate]
void write_sweep_csv(const SweepResult& result, std::ostream& out);
std::string sweep_metadata_json(const SweepResult& result);

}  // namespace satchoice
