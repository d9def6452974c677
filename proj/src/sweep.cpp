#include "satchoice/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "satchoice/heuristics.hpp"
#include "satchoice/solvers.hpp"

namespace satchoice {

SweepEngine parse_sweep_engine(const std::string& name) {
    if (name == "uc") return SweepEngine::Uc;
    if (name == "buc") return SweepEngine::Buc;
    if (name == "sc") return SweepEngine::Sc;
    if (name == "bsc") return SweepEngine::Bsc;
    if (name == "dpll") return SweepEngine::Dpll;
    if (name == "2sat") return SweepEngine::TwoSat;
    throw std::invalid_argument("unknown engine '" + name + "', expected uc|buc|sc|bsc|dpll|2sat");
}

std::string sweep_engine_name(SweepEngine e) {
    switch (e) {
        case SweepEngine::Uc: return "uc";
        case SweepEngine::Buc: return "buc";
        case SweepEngine::Sc: return "sc";
        case SweepEngine::Bsc: return "bsc";
        case SweepEngine::Dpll: return "dpll";
        case SweepEngine::TwoSat: return "2sat";
    }
    return "?";
}

std::vector<double> DensityGrid::points() const {
    std::vector<double> out;
    if (!(step > 0.0)) throw std::invalid_argument("density grid step must be > 0");
    for (double alpha = start; alpha <= stop + 1e-12; alpha += step) out.push_back(alpha);
    if (out.empty()) throw std::invalid_argument("density grid is empty");
    return out;
}

void SweepConfig::check() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    (void)grid.points();
    const int width = ell.value_or(k);
    if (width < 1 || width > k) throw std::invalid_argument("need 1 <= ell <= k");
    if (engine == SweepEngine::TwoSat && width > 2)
        throw std::invalid_argument("2sat engine needs width <= 2 (set --ell 2 or k = 2)");
}

std::string SweepConfig::to_json() const {
    nlohmann::json j{{"k", k},
                     {"t", t},
                     {"rule", rule.to_string()},
                     {"engine", sweep_engine_name(engine)},
                     {"n", n},
                     {"grid", {{"start", grid.start}, {"stop", grid.stop}, {"step", grid.step}}},
                     {"trials", trials},
                     {"seed", seed},
                     {"workers", workers}};
    if (ell) j["ell"] = *ell;
    return j.dump();
}

SweepConfig SweepConfig::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SweepConfig cfg;
    cfg.k = j.at("k").get<int>();
    cfg.t = j.at("t").get<int>();
    cfg.rule = ChoiceRule::parse(j.at("rule").get<std::string>());
    cfg.engine = parse_sweep_engine(j.at("engine").get<std::string>());
    cfg.n = j.at("n").get<int>();
    cfg.grid.start = j.at("grid").at("start").get<double>();
    cfg.grid.stop = j.at("grid").at("stop").get<double>();
    cfg.grid.step = j.at("grid").at("step").get<double>();
    cfg.trials = j.at("trials").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
    if (j.contains("ell")) cfg.ell = j.at("ell").get<int>();
    if (j.contains("dpll_budget")) cfg.dpll_budget = j.at("dpll_budget").get<std::uint64_t>();
    cfg.check();
    return cfg;
}

double DensityResult::rate() const {
    const long decided = trials - indeterminate;
    return decided > 0 ? static_cast<double>(successes) / static_cast<double>(decided) : 0.0;
}

WilsonInterval DensityResult::wilson() const {
    const long decided = trials - indeterminate;
    if (decided < 1) return {0.0, 1.0};
    return wilson95(successes, decided);
}

int run_trial(const SweepConfig& cfg, std::size_t density_index, double alpha, long trial) {
    const std::uint64_t trial_seed = derive_seed(
        cfg.seed, {static_cast<std::uint64_t>(density_index), static_cast<std::uint64_t>(trial)});
    GenConfig gen_cfg =
        GenConfig::with_alpha(cfg.n, cfg.k, alpha, cfg.t, cfg.rule, derive_seed(trial_seed, {0}));
    Formula f = generate(gen_cfg);
    Rng rng = derive_stream(trial_seed, {1});
    if (cfg.ell && *cfg.ell < cfg.k) f = reduce_most_positive(f, *cfg.ell, rng);

    switch (cfg.engine) {
        case SweepEngine::Uc:
        case SweepEngine::Buc:
        case SweepEngine::Sc:
        case SweepEngine::Bsc: {
            const Engine engine = cfg.engine == SweepEngine::Uc    ? Engine::Uc
                                  : cfg.engine == SweepEngine::Buc ? Engine::Buc
                                  : cfg.engine == SweepEngine::Sc  ? Engine::Sc
                                                                   : Engine::Bsc;
            const HeuristicResult result = run_heuristic(engine, f, rng);
            if (!result.success) return 0;
            return evaluate(f, result.assignment) == EvalResult::Satisfied ? 1 : -1;
        }
        case SweepEngine::Dpll: {
            const SolveResult result = dpll_sat(f, cfg.dpll_budget);
            if (result.status == SolveStatus::BudgetExhausted) return -1;
            if (result.status == SolveStatus::Unsat) return 0;
            return evaluate(f, result.assignment) == EvalResult::Satisfied ? 1 : -1;
        }
        case SweepEngine::TwoSat: {
            const SolveResult result = two_sat_scc(f);
            if (result.status == SolveStatus::Unsat) return 0;
            return evaluate(f, result.assignment) == EvalResult::Satisfied ? 1 : -1;
        }
    }
    return -1;
}

namespace {

SweepResult run_impl(const SweepConfig& cfg, bool parallel) {
    cfg.check();
    const std::vector<double> alphas = cfg.grid.points();
    SweepResult result;
    result.config = cfg;
    result.densities.resize(alphas.size());

    int workers = cfg.workers;
    if (const char* env = std::getenv("SATCHOICE_WORKERS"); env != nullptr && *env != '\0')
        workers = std::atoi(env);

    for (std::size_t d = 0; d < alphas.size(); ++d) {
        DensityResult& density = result.densities[d];
        density.alpha = alphas[d];
        density.trials = cfg.trials;
        long successes = 0, indeterminate = 0;
        if (parallel) {
#ifdef _OPENMP
            if (workers > 0) omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic) reduction(+ : successes, indeterminate)
            for (long trial = 0; trial < cfg.trials; ++trial) {
                const int outcome = run_trial(cfg, d, alphas[d], trial);
                successes += outcome == 1 ? 1 : 0;
                indeterminate += outcome == -1 ? 1 : 0;
            }
#else
            parallel = false;
#endif
        }
        if (!parallel) {
            for (long trial = 0; trial < cfg.trials; ++trial) {
                const int outcome = run_trial(cfg, d, alphas[d], trial);
                successes += outcome == 1 ? 1 : 0;
                indeterminate += outcome == -1 ? 1 : 0;
            }
        }
        density.successes = successes;
        density.indeterminate = indeterminate;
    }
    return result;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) { return run_impl(cfg, true); }
SweepResult run_sweep_serial(const SweepConfig& cfg) { return run_impl(cfg, false); }

std::optional<double> estimate_transition(const SweepResult& result) {
    const auto& ds = result.densities;
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        const double r0 = ds[i].rate(), r1 = ds[i + 1].rate();
        if ((r0 - 0.5) * (r1 - 0.5) <= 0.0 && r0 != r1) {
            return ds[i].alpha + (0.5 - r0) / (r1 - r0) * (ds[i + 1].alpha - ds[i].alpha);
        }
    }
    return std::nullopt;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    bool any_indeterminate = false;
    for (const DensityResult& d : result.densities)
        any_indeterminate = any_indeterminate || d.indeterminate > 0;
    out << "alpha,trials,successes,rate,ci_low,ci_high";
    if (any_indeterminate) out << ",indeterminate";
    out << "\n";
    char buf[256];
    for (const DensityResult& d : result.densities) {
        const WilsonInterval ci = d.wilson();
        std::snprintf(buf, sizeof buf, "%.10g,%ld,%ld,%.10g,%.10g,%.10g", d.alpha, d.trials,
                      d.successes, d.rate(), ci.low, ci.high);
        out << buf;
        if (any_indeterminate) out << ',' << d.indeterminate;
        out << "\n";
    }
}

std::string sweep_metadata_json(const SweepResult& result) {
    nlohmann::json j = nlohmann::json::parse(result.config.to_json());
    j["version"] = "satchoice 1.0.0";
    return j.dump(2);
}

}  // namespace satchoice
