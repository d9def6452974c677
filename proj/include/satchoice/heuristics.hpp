#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "satchoice/formula.hpp"
#include "satchoice/rng.hpp"

namespace satchoice {

enum class Engine { Uc, Buc, Sc, Bsc };

Engine parse_engine_name(const std::string& name);  // uc|buc|sc|bsc
std::string engine_name(Engine e);

// Counts of active i-clauses with j positive literals after T variables set.
struct ClauseCensus {
    int T = 0;
    int k = 0;
    // S[i][j], 1 <= i <= k, 0 <= j <= i; S[0] unused
    std::vector<std::vector<long>> S;

    explicit ClauseCensus(int k_ = 0, int T_ = 0);
    long total() const;
};

struct HeuristicResult {
    bool success = false;
    int contradiction_step = -1;  // step index (0-based) on failure
    Assignment assignment;
    std::vector<ClauseCensus> trace;  // sampled every floor(n/1000) steps when enabled
};

struct HeuristicOptions {
    bool record_trace = false;
};

HeuristicResult run_uc(const Formula& f, Rng& rng, const HeuristicOptions& opt = {});
HeuristicResult run_buc(const Formula& f, Rng& rng, const HeuristicOptions& opt = {});
HeuristicResult run_sc(const Formula& f, Rng& rng, const HeuristicOptions& opt = {});
HeuristicResult run_bsc(const Formula& f, Rng& rng, const HeuristicOptions& opt = {});

HeuristicResult run_heuristic(Engine e, const Formula& f, Rng& rng,
                              const HeuristicOptions& opt = {});

// Census of an untouched formula (T = 0).
ClauseCensus census_of(const Formula& f);

// CSV: T, then S[i][j] in lexicographic (i, j) order.
void write_trace_csv(const std::vector<ClauseCensus>& trace, std::ostream& out);

}  // namespace satchoice
