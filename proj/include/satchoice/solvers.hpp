#pragma once

#include <cstdint>

#include "satchoice/formula.hpp"

namespace satchoice {

enum class SolveStatus { Sat, Unsat, BudgetExhausted };

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    Assignment assignment;  // populated on Sat
};

// Complete DPLL: unit propagation, pure-literal elimination, branch on the
// most frequent variable (true first). Stops with BudgetExhausted after
// node_budget search nodes, never with a wrong answer.
SolveResult dpll_sat(const Formula& f, std::uint64_t node_budget = 50'000'000);

// Implication-graph / SCC decision for formulas of width <= 2. Unit clauses
// are treated as the self-pair (u or u).
SolveResult two_sat_scc(const Formula& f);

}  // namespace satchoice
