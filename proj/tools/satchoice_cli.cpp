// satchoice command-line front end: formula generation, reduction,
// heuristics, exact solving, ODE analysis, closed-form calculators, and
// Monte Carlo sweeps. Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "satchoice/choice.hpp"
#include "satchoice/dimacs.hpp"
#include "satchoice/heuristics.hpp"
#include "satchoice/ode.hpp"
#include "satchoice/profile.hpp"
#include "satchoice/solvers.hpp"
#include "satchoice/sweep.hpp"
#include "satchoice/threshold.hpp"

namespace {

using namespace satchoice;

Formula read_input(const std::string& path) {
    if (path.empty() || path == "-") return parse_dimacs(std::cin);
    return parse_dimacs_file(path);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    auto out = open_out(path);
    out << text;
}

void print_model_line(const Assignment& a, int n, std::ostream& out) {
    out << "v";
    for (int v = 1; v <= n; ++v) out << ' ' << (a[v] == Truth::False ? -v : v);
    out << " 0\n";
}

struct CliOptions {
    int n = 1000, k = 3, t = 1, ell = 0;
    int m = -1;
    double alpha = -1.0;
    std::string rule = "most-positive";
    std::string engine;
    std::uint64_t seed = 0;
    double tol = 1e-3;
    std::string out;
    std::string input;
    int workers = 0;
};

int run(int argc, char** argv) {
    CLI::App app{"Achlioptas-process workbench for random k-SAT"};
    app.require_subcommand(1);
    CliOptions opt;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a formula under an on-line choice rule");
    gen->add_option("--n", opt.n, "variable count")->required();
    gen->add_option("--k", opt.k, "clause width")->required();
    gen->add_option("--m", opt.m, "clause count");
    gen->add_option("--alpha", opt.alpha, "density m/n (alternative to --m)");
    gen->add_option("--choices", opt.t, "candidate clauses per step (t)");
    gen->add_option("--rule", opt.rule, "most-positive|subcube:<a>|uniform");
    gen->add_option("--seed", opt.seed, "master RNG seed");
    gen->add_option("--out", opt.out, "output file (default stdout)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "keep the ell most positive literals per clause");
    reduce->add_option("input", opt.input, "DIMACS file ('-' for stdin)");
    reduce->add_option("--ell", opt.ell, "reduced width")->required();
    reduce->add_option("--seed", opt.seed, "RNG seed");
    reduce->add_option("--out", opt.out, "output file (default stdout)");

    // heuristic
    auto* heur = app.add_subcommand("heuristic", "run a linear-time heuristic (uc|buc|sc|bsc)");
    heur->add_option("input", opt.input, "DIMACS file ('-' for stdin)");
    heur->add_option("--engine", opt.engine, "uc|buc|sc|bsc")->required();
    heur->add_option("--seed", opt.seed, "RNG seed");
    heur->add_option("--trace", opt.out, "census trace CSV output");

    // solve
    auto* solve = app.add_subcommand("solve", "exact solving (dpll|2sat)");
    solve->add_option("input", opt.input, "DIMACS file ('-' for stdin)");
    solve->add_option("--engine", opt.engine, "dpll|2sat")->required();

    // analyze critical / trajectory
    auto* analyze = app.add_subcommand("analyze", "differential-equation analysis");
    analyze->require_subcommand(1);
    std::string model = "buc";
    auto* critical = analyze->add_subcommand("critical", "binary search for the critical density");
    critical->add_option("--model", model, "buc|bsc")->required();
    critical->add_option("--k", opt.k, "source clause width")->required();
    critical->add_option("--t", opt.t, "choices per step")->required();
    critical->add_option("--ell", opt.ell, "reduced width (= ODE top width; default k)");
    critical->add_option("--tol", opt.tol, "relative binary-search tolerance");
    critical->add_option("--out", opt.out, "JSON output (default stdout)");

    auto* trajectory = analyze->add_subcommand("trajectory", "integrate and export one trajectory");
    trajectory->add_option("--model", model, "buc|bsc")->required();
    trajectory->add_option("--k", opt.k, "source clause width")->required();
    trajectory->add_option("--t", opt.t, "choices per step")->required();
    trajectory->add_option("--ell", opt.ell, "reduced width (default k)");
    trajectory->add_option("--alpha", opt.alpha, "density")->required();
    double step = 1e-4;
    trajectory->add_option("--step", step, "integration step");
    trajectory->add_option("--out", opt.out, "CSV output (default stdout)");

    // calc
    auto* calc = app.add_subcommand("calc", "closed-form calculators");
    calc->require_subcommand(1);
    auto* two_sat = calc->add_subcommand("two-sat-threshold", "biased 2-SAT critical density");
    two_sat->add_option("--k", opt.k, "source clause width")->required();
    two_sat->add_option("--t", opt.t, "choices per step")->required();
    two_sat->add_option("--out", opt.out, "JSON output (default stdout)");

    auto* gamma_cmd = calc->add_subcommand("gamma", "subcube lowering factor");
    gamma_cmd->add_option("--k", opt.k, "clause width")->required();
    gamma_cmd->add_option("--t", opt.t, "choices per step")->required();
    double a_value = -1.0;
    gamma_cmd->add_option("--a", a_value, "subcube fraction (default: the optimizer)");
    gamma_cmd->add_option("--out", opt.out, "JSON output (default stdout)");

    auto* min_choices = calc->add_subcommand("min-choices", "choices needed to beat gamma_k");
    min_choices->add_option("--k", opt.k, "clause width")->required();
    double gamma_k = 4.4898 / 3.52;
    min_choices->add_option("--gamma-k", gamma_k, "bound ratio to beat (default 4.4898/3.52)");
    min_choices->add_option("--out", opt.out, "JSON output (default stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo success-rate sweep over densities");
    std::string config_path;
    sweep->add_option("--config", config_path, "JSON sweep config (overrides other flags)");
    sweep->add_option("--n", opt.n, "variable count");
    sweep->add_option("--k", opt.k, "clause width");
    sweep->add_option("--choices", opt.t, "candidate clauses per step (t)");
    sweep->add_option("--rule", opt.rule, "most-positive|subcube:<a>|uniform");
    sweep->add_option("--ell", opt.ell, "reduce to ell most positive literals");
    sweep->add_option("--engine", opt.engine, "uc|buc|sc|bsc|dpll|2sat");
    double start = 0.0, stop = 0.0, grid_step = 0.1;
    int trials = 100;
    sweep->add_option("--alpha-start", start, "density grid start");
    sweep->add_option("--alpha-stop", stop, "density grid stop");
    sweep->add_option("--alpha-step", grid_step, "density grid step");
    sweep->add_option("--trials", trials, "trials per density");
    sweep->add_option("--seed", opt.seed, "master seed");
    sweep->add_option("--workers", opt.workers, "worker threads (0 = all)");
    sweep->add_option("--out", opt.out, "CSV output; metadata JSON sidecar goes next to it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    if (gen->parsed()) {
        GenConfig cfg;
        if (opt.alpha >= 0.0) {
            cfg = GenConfig::with_alpha(opt.n, opt.k, opt.alpha, opt.t,
                                        ChoiceRule::parse(opt.rule), opt.seed);
        } else {
            if (opt.m < 0) throw CLI::ValidationError("gen", "need --m or --alpha");
            cfg.n = opt.n;
            cfg.k = opt.k;
            cfg.m = opt.m;
            cfg.t = opt.t;
            cfg.rule = ChoiceRule::parse(opt.rule);
            cfg.seed = opt.seed;
        }
        write_text(opt.out, emit_dimacs(generate(cfg)));
        return 0;
    }
    if (reduce->parsed()) {
        const Formula f = read_input(opt.input);
        Rng rng = derive_stream(opt.seed, {});
        write_text(opt.out, emit_dimacs(reduce_most_positive(f, opt.ell, rng)));
        return 0;
    }
    if (heur->parsed()) {
        const Formula f = read_input(opt.input);
        Rng rng = derive_stream(opt.seed, {});
        HeuristicOptions hopt;
        hopt.record_trace = !opt.out.empty();
        const HeuristicResult result = run_heuristic(parse_engine_name(opt.engine), f, rng, hopt);
        if (hopt.record_trace) {
            auto out = open_out(opt.out);
            write_trace_csv(result.trace, out);
        }
        if (result.success) {
            std::cout << "s SATISFIABLE\n";
            print_model_line(result.assignment, f.n, std::cout);
        } else {
            std::cout << "s GAVE-UP step=" << result.contradiction_step << "\n";
        }
        return 0;
    }
    if (solve->parsed()) {
        const Formula f = read_input(opt.input);
        SolveResult result;
        if (opt.engine == "dpll")
            result = dpll_sat(f);
        else if (opt.engine == "2sat")
            result = two_sat_scc(f);
        else
            throw CLI::ValidationError("solve", "engine must be dpll or 2sat");
        switch (result.status) {
            case SolveStatus::Sat:
                std::cout << "s SATISFIABLE\n";
                print_model_line(result.assignment, f.n, std::cout);
                break;
            case SolveStatus::Unsat:
                std::cout << "s UNSATISFIABLE\n";
                break;
            case SolveStatus::BudgetExhausted:
                std::cout << "s UNKNOWN budget-exhausted\n";
                break;
        }
        return 0;
    }
    if (critical->parsed()) {
        CriticalModel cm;
        cm.model = model == "bsc" ? OdeModel::Bsc : OdeModel::Buc;
        cm.k = opt.k;
        cm.t = opt.t;
        cm.ell = opt.ell > 0 ? opt.ell : opt.k;
        const double alpha_star = critical_alpha(cm, opt.tol);
        nlohmann::json j{{"model", model},       {"k", cm.k},
                         {"t", cm.t},            {"ell", cm.ell},
                         {"alpha_star", alpha_star}, {"tolerance", opt.tol}};
        write_text(opt.out, j.dump(2) + "\n");
        return 0;
    }
    if (trajectory->parsed()) {
        const int ell = opt.ell > 0 ? opt.ell : opt.k;
        const PositiveProfile profile = positive_profile(opt.k, opt.t, ell);
        StepControl ctrl;
        ctrl.step = step;
        const OdeModel om = model == "bsc" ? OdeModel::Bsc : OdeModel::Buc;
        const Trajectory traj = om == OdeModel::Bsc ? integrate_bsc(profile, opt.alpha, ctrl)
                                                    : integrate_buc(ell, profile, opt.alpha, ctrl);
        std::ostringstream csv;
        write_trajectory_csv(traj, om, csv);
        write_text(opt.out, csv.str());
        if (traj.supercritical)
            std::cerr << "supercritical at t = " << traj.supercritical_t << "\n";
        return 0;
    }
    if (two_sat->parsed()) {
        const PositiveProfile profile = positive_profile(opt.k, opt.t, 2);
        const double closed = choice_two_sat_alpha(opt.k, opt.t);
        const double numeric = two_sat_threshold(profile.p[0], profile.p[1], profile.p[2]);
        nlohmann::json j{{"k", opt.k},
                         {"t", opt.t},
                         {"alpha_star_closed_form", closed},
                         {"alpha_star_from_profile", numeric},
                         {"p", profile.p}};
        write_text(opt.out, j.dump(2) + "\n");
        return 0;
    }
    if (gamma_cmd->parsed()) {
        nlohmann::json j{{"k", opt.k}, {"t", opt.t}};
        if (a_value > 0.0) {
            j["a"] = a_value;
            j["gamma"] = lowering_gamma(a_value, opt.k, opt.t);
        }
        const OptimalLowering best = optimal_a(opt.k, opt.t);
        j["optimal_a"] = best.a;
        j["gamma_max"] = best.gamma;
        write_text(opt.out, j.dump(2) + "\n");
        return 0;
    }
    if (min_choices->parsed()) {
        const int t_needed = min_choices_to_lower(opt.k, gamma_k);
        nlohmann::json j{{"k", opt.k}, {"gamma_k", gamma_k}, {"min_choices", t_needed}};
        write_text(opt.out, j.dump(2) + "\n");
        return 0;
    }
    if (sweep->parsed()) {
        SweepConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config " + config_path);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            cfg = SweepConfig::from_json(buffer.str());
        } else {
            cfg.n = opt.n;
            cfg.k = opt.k;
            cfg.t = opt.t;
            cfg.rule = ChoiceRule::parse(opt.rule);
            if (opt.ell > 0) cfg.ell = opt.ell;
            if (opt.engine.empty()) throw CLI::ValidationError("sweep", "need --engine");
            cfg.engine = parse_sweep_engine(opt.engine);
            cfg.grid = {start, stop, grid_step};
            cfg.trials = trials;
            cfg.seed = opt.seed;
            cfg.workers = opt.workers;
        }
        const SweepResult result = run_sweep(cfg);
        std::ostringstream csv;
        write_sweep_csv(result, csv);
        write_text(opt.out, csv.str());
        if (!opt.out.empty() && opt.out != "-") {
            auto meta = open_out(opt.out + ".meta.json");
            meta << sweep_metadata_json(result) << "\n";
        }
        if (const auto crossing = estimate_transition(result))
            std::cerr << "transition estimate: alpha = " << *crossing << "\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
