#include <doctest.h>

#include "satchoice/choice.hpp"
#include "satchoice/solvers.hpp"

using namespace satchoice;

namespace {

Clause clause(std::initializer_list<int> lits) {
    Clause c;
    for (int e : lits) c.literals.push_back(Literal::from_encoded(e));
    return c;
}

// independent oracle: exhaustive enumeration over all 2^n assignments
bool brute_force_sat(const Formula& f) {
    std::vector<std::uint32_t> pos_mask(f.clauses.size(), 0), neg_mask(f.clauses.size(), 0);
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (const Literal& lit : f.clauses[c].literals)
            (lit.positive ? pos_mask[c] : neg_mask[c]) |= 1u << (lit.var - 1);
    for (std::uint32_t a = 0; a < (1u << f.n); ++a) {
        bool sat = true;
        for (std::size_t c = 0; c < f.clauses.size() && sat; ++c)
            sat = ((a & pos_mask[c]) | (~a & neg_mask[c])) != 0;
        if (sat) return true;
    }
    return f.clauses.empty();
}

Formula random_formula(int n, int k, int m, std::uint64_t seed) {
    GenConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.m = m;
    cfg.t = 1;
    cfg.rule = ChoiceRule::uniform();
    cfg.seed = seed;
    return generate(cfg);
}

}  // namespace

TEST_CASE("dpll on trivial contradictions and tautologies") {
    Formula f;
    f.n = 1;
    f.clauses = {clause({1}), clause({-1})};
    CHECK(dpll_sat(f).status == SolveStatus::Unsat);

    f.clauses = {clause({1})};
    const SolveResult result = dpll_sat(f);
    REQUIRE(result.status == SolveStatus::Sat);
    CHECK(evaluate(f, result.assignment) == EvalResult::Satisfied);
}

TEST_CASE("dpll agrees with exhaustive enumeration on random 3-SAT") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Formula f = random_formula(12, 3, 60, seed);
        const SolveResult result = dpll_sat(f);
        REQUIRE(result.status != SolveStatus::BudgetExhausted);
        CHECK((result.status == SolveStatus::Sat) == brute_force_sat(f));
        if (result.status == SolveStatus::Sat)
            CHECK(evaluate(f, result.assignment) == EvalResult::Satisfied);
    }
}

TEST_CASE("dpll reports budget exhaustion instead of guessing") {
    const Formula f = random_formula(60, 3, 260, 17);
    const SolveResult result = dpll_sat(f, 1);
    CHECK(result.status == SolveStatus::BudgetExhausted);
}

TEST_CASE("two_sat_scc on the four-pattern contradiction") {
    Formula f;
    f.n = 2;
    f.clauses = {clause({1, 2}), clause({-1, 2}), clause({1, -2}), clause({-1, -2})};
    CHECK(two_sat_scc(f).status == SolveStatus::Unsat);
}

TEST_CASE("two_sat_scc on a single clause") {
    Formula f;
    f.n = 2;
    f.clauses = {clause({1, 2})};
    const SolveResult result = two_sat_scc(f);
    REQUIRE(result.status == SolveStatus::Sat);
    CHECK(evaluate(f, result.assignment) == EvalResult::Satisfied);
}

TEST_CASE("two_sat_scc handles unit clauses as self-pairs") {
    Formula f;
    f.n = 2;
    f.clauses = {clause({1}), clause({-1, 2}), clause({-2})};
    CHECK(two_sat_scc(f).status == SolveStatus::Unsat);

    f.clauses = {clause({1}), clause({-1, 2})};
    const SolveResult result = two_sat_scc(f);
    REQUIRE(result.status == SolveStatus::Sat);
    CHECK(result.assignment[1] == Truth::True);
    CHECK(result.assignment[2] == Truth::True);
}

TEST_CASE("two_sat_scc rejects wide clauses") {
    Formula f;
    f.n = 3;
    f.clauses = {clause({1, 2, 3})};
    CHECK_THROWS_AS(two_sat_scc(f), std::invalid_argument);
}

TEST_CASE("dpll and two_sat_scc agree on random biased 2-SAT") {
    int sat_seen = 0, unsat_seen = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GenConfig cfg;
        cfg.n = 200;
        cfg.k = 3;
        cfg.m = 450;  // near the biased 2-SAT transition for this profile
        cfg.t = 2;
        cfg.rule = ChoiceRule::most_positive();
        cfg.seed = seed;
        Rng rng(derive_seed(seed, {5}));
        const Formula f = reduce_most_positive(generate(cfg), 2, rng);
        const SolveResult scc = two_sat_scc(f);
        const SolveResult dpll = dpll_sat(f);
        REQUIRE(dpll.status != SolveStatus::BudgetExhausted);
        CHECK(scc.status == dpll.status);
        if (scc.status == SolveStatus::Sat) {
            ++sat_seen;
            CHECK(evaluate(f, scc.assignment) == EvalResult::Satisfied);
        } else {
            ++unsat_seen;
        }
    }
    // the density sits near the biased transition so both outcomes occur
    CHECK(sat_seen > 0);
    CHECK(unsat_seen > 0);
}
