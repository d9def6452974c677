#include "satchoice/heuristics.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace satchoice {

Engine parse_engine_name(const std::string& name) {
    if (name == "uc") return Engine::Uc;
    if (name == "buc") return Engine::Buc;
    if (name == "sc") return Engine::Sc;
    if (name == "bsc") return Engine::Bsc;
    throw std::invalid_argument("unknown engine '" + name + "', expected uc|buc|sc|bsc");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Uc: return "uc";
        case Engine::Buc: return "buc";
        case Engine::Sc: return "sc";
        case Engine::Bsc: return "bsc";
    }
    return "?";
}

ClauseCensus::ClauseCensus(int k_, int T_) : T(T_), k(k_) {
    S.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) S[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 0);
}

long ClauseCensus::total() const {
    long sum = 0;
    for (const auto& row : S)
        for (long v : row) sum += v;
    return sum;
}

ClauseCensus census_of(const Formula& f) {
    int k = f.width;
    if (k == 0)
        for (const Clause& c : f.clauses) k = std::max(k, c.width());
    ClauseCensus census(k, 0);
    for (const Clause& c : f.clauses)
        census.S[static_cast<std::size_t>(c.width())][static_cast<std::size_t>(positive_count(c))]++;
    return census;
}

void write_trace_csv(const std::vector<ClauseCensus>& trace, std::ostream& out) {
    out << "T";
    if (!trace.empty()) {
        const int k = trace.front().k;
        for (int i = 1; i <= k; ++i)
            for (int j = 0; j <= i; ++j) out << ",S" << i << "_" << j;
    }
    out << "\n";
    for (const ClauseCensus& census : trace) {
        out << census.T;
        for (int i = 1; i <= census.k; ++i)
            for (long v : census.S[static_cast<std::size_t>(i)]) out << ',' << v;
        out << "\n";
    }
}

namespace {

// One variable is set per step. Per-literal occurrence lists make each step
// cost proportional to the clauses touched, so a full run is linear in the
// formula size. Unit and 2-clause pools are cleaned lazily: an entry is
// stale once its clause was satisfied or changed width again.
class EngineState {
public:
    EngineState(const Formula& f, Engine engine, Rng& rng, const HeuristicOptions& opt)
        : f_(f), engine_(engine), rng_(rng), opt_(opt), assignment_(f.n),
          census_(initial_width(f), 0) {
        const auto mc = f.clauses.size();
        size_.resize(mc);
        pos_.resize(mc);
        alive_.assign(mc, true);
        occ_.resize(2 * static_cast<std::size_t>(f.n) + 2);
        for (std::size_t c = 0; c < mc; ++c) {
            const Clause& clause = f.clauses[c];
            size_[c] = clause.width();
            pos_[c] = positive_count(clause);
            census_.S[static_cast<std::size_t>(size_[c])][static_cast<std::size_t>(pos_[c])]++;
            for (const Literal& lit : clause.literals)
                occ_[occ_index(lit)].push_back(static_cast<int>(c));
            if (size_[c] == 1) unit_pool_.push_back(static_cast<int>(c));
            if (size_[c] == 2) two_pool_.push_back(static_cast<int>(c));
        }
        unset_.resize(static_cast<std::size_t>(f.n));
        pos_in_unset_.resize(static_cast<std::size_t>(f.n) + 1);
        for (int v = 1; v <= f.n; ++v) {
            unset_[static_cast<std::size_t>(v - 1)] = v;
            pos_in_unset_[static_cast<std::size_t>(v)] = v - 1;
        }
    }

    HeuristicResult run() {
        HeuristicResult result;
        const int stride = std::max(1, f_.n / 1000);
        for (int step = 0; step < f_.n; ++step) {
            if (opt_.record_trace && step % stride == 0) {
                census_.T = step;
                result.trace.push_back(census_);
            }
            if (!do_step()) {
                result.success = false;
                result.contradiction_step = step;
                result.assignment = assignment_;
                return result;
            }
        }
        if (opt_.record_trace) {
            census_.T = f_.n;
            result.trace.push_back(census_);
        }
        result.success = true;
        result.assignment = assignment_;
        return result;
    }

private:
    static int initial_width(const Formula& f) {
        int k = f.width;
        if (k == 0)
            for (const Clause& c : f.clauses) k = std::max(k, c.width());
        return std::max(k, 1);
    }

    static std::size_t occ_index(const Literal& lit) {
        return 2 * static_cast<std::size_t>(lit.var) + (lit.positive ? 0 : 1);
    }

    // Uniform valid entry from a lazily cleaned pool, or -1.
    int pop_from_pool(std::vector<int>& pool, int want_size) {
        while (!pool.empty()) {
            const std::size_t idx = rng_.below(pool.size());
            const int c = pool[idx];
            pool[idx] = pool.back();
            pool.pop_back();
            if (alive_[static_cast<std::size_t>(c)] && size_[static_cast<std::size_t>(c)] == want_size)
                return c;
        }
        return -1;
    }

    // The literals of clause c whose variables are still unset.
    void active_literals(int c, std::vector<Literal>& out) const {
        out.clear();
        for (const Literal& lit : f_.clauses[static_cast<std::size_t>(c)].literals)
            if (assignment_[lit.var] == Truth::Unset) out.push_back(lit);
    }

    bool do_step() {
        // forced step
        if (const int c = pop_from_pool(unit_pool_, 1); c >= 0) {
            active_literals(c, scratch_);
            const Literal lit = scratch_.front();
            return set_variable(lit.var, lit.positive);
        }
        switch (engine_) {
            case Engine::Buc:
                return set_variable(random_unset(), true);
            case Engine::Uc:
                return set_variable(random_unset(), rng_.coin());
            case Engine::Sc:
            case Engine::Bsc: {
                if (const int c = pop_from_pool(two_pool_, 2); c >= 0) {
                    active_literals(c, scratch_);
                    Literal chosen = scratch_[rng_.below(scratch_.size())];
                    if (engine_ == Engine::Bsc) {
                        // prefer satisfying via a positive literal
                        std::vector<Literal> positives;
                        for (const Literal& lit : scratch_)
                            if (lit.positive) positives.push_back(lit);
                        if (!positives.empty())
                            chosen = positives[rng_.below(positives.size())];
                    }
                    return set_variable(chosen.var, chosen.positive);
                }
                // really free step
                return set_variable(random_unset(), rng_.coin());
            }
        }
        return false;
    }

    int random_unset() { return unset_[rng_.below(unset_.size())]; }

    bool set_variable(int var, bool value) {
        assignment_.set(var, value);
        const std::size_t slot = pos_in_unset_[static_cast<std::size_t>(var)];
        const int moved = unset_.back();
        unset_[slot] = moved;
        pos_in_unset_[static_cast<std::size_t>(moved)] = slot;
        unset_.pop_back();

        // clauses containing the satisfied literal are removed
        for (int c : occ_[occ_index({var, value})]) {
            const auto uc = static_cast<std::size_t>(c);
            if (!alive_[uc]) continue;
            census_.S[static_cast<std::size_t>(size_[uc])][static_cast<std::size_t>(pos_[uc])]--;
            alive_[uc] = false;
        }
        // clauses containing the falsified literal are shortened
        bool ok = true;
        for (int c : occ_[occ_index({var, !value})]) {
            const auto uc = static_cast<std::size_t>(c);
            if (!alive_[uc]) continue;
            census_.S[static_cast<std::size_t>(size_[uc])][static_cast<std::size_t>(pos_[uc])]--;
            size_[uc]--;
            if (!value) pos_[uc]--;  // the removed literal was positive
            if (size_[uc] == 0) {
                alive_[uc] = false;
                ok = false;  // empty clause: contradiction
                continue;
            }
            census_.S[static_cast<std::size_t>(size_[uc])][static_cast<std::size_t>(pos_[uc])]++;
            if (size_[uc] == 1) unit_pool_.push_back(c);
            if (size_[uc] == 2) two_pool_.push_back(c);
        }
        return ok;
    }

    const Formula& f_;
    Engine engine_;
    Rng& rng_;
    HeuristicOptions opt_;
    Assignment assignment_;
    ClauseCensus census_;
    std::vector<int> size_, pos_;
    std::vector<bool> alive_;
    std::vector<std::vector<int>> occ_;
    std::vector<int> unit_pool_, two_pool_;
    std::vector<int> unset_;
    std::vector<std::size_t> pos_in_unset_;
    std::vector<Literal> scratch_;
};

}  // namespace

HeuristicResult run_heuristic(Engine e, const Formula& f, Rng& rng,
                              const HeuristicOptions& opt) {
    if (f.n < 1) throw std::invalid_argument("run_heuristic: formula has no variables");
    EngineState state(f, e, rng, opt);
    return state.run();
}

HeuristicResult run_uc(const Formula& f, Rng& rng, const HeuristicOptions& opt) {
    return run_heuristic(Engine::Uc, f, rng, opt);
}
HeuristicResult run_buc(const Formula& f, Rng& rng, const HeuristicOptions& opt) {
    return run_heuristic(Engine::Buc, f, rng, opt);
}
HeuristicResult run_sc(const Formula& f, Rng& rng, const HeuristicOptions& opt) {
    return run_heuristic(Engine::Sc, f, rng, opt);
}
HeuristicResult run_bsc(const Formula& f, Rng& rng, const HeuristicOptions& opt) {
    return run_heuristic(Engine::Bsc, f, rng, opt);
}

}  // namespace satchoice
