#include <doctest.h>

#include <cmath>

#include "satchoice/choice.hpp"
#include "satchoice/dimacs.hpp"
#include "satchoice/formula.hpp"
#include "satchoice/rng.hpp"

using namespace satchoice;

namespace {

Clause clause(std::initializer_list<int> lits) {
    Clause c;
    for (int e : lits) c.literals.push_back(Literal::from_encoded(e));
    return c;
}

}  // namespace

TEST_CASE("positive_count counts positive literals") {
    CHECK(positive_count(clause({-1, -2, -3})) == 0);
    CHECK(positive_count(clause({1, -2, 3})) == 2);
    CHECK(positive_count(clause({1})) == 1);
}

TEST_CASE("positive_count of uniform random 3-clauses has binomial mean") {
    // Binomial(3, 1/2) oracle: mean 1.5, sd per sample sqrt(3)/2
    Rng rng(42);
    const int samples = 100000;
    double sum = 0;
    for (int i = 0; i < samples; ++i) sum += positive_count(random_clause(100, 3, rng));
    const double mean = sum / samples;
    const double sigma = std::sqrt(3.0) / 2.0 / std::sqrt(static_cast<double>(samples));
    CHECK(std::abs(mean - 1.5) < 3 * sigma);
}

TEST_CASE("positive plus negative count equals width") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Clause c = random_clause(50, 1 + static_cast<int>(rng.below(6)), rng);
        int negatives = 0;
        for (const Literal& lit : c.literals) negatives += lit.positive ? 0 : 1;
        CHECK(positive_count(c) + negatives == c.width());
    }
}

TEST_CASE("evaluate") {
    Formula empty;
    empty.n = 3;
    CHECK(evaluate(empty, Assignment(3)) == EvalResult::Satisfied);

    Formula f;
    f.n = 1;
    f.clauses = {clause({1}), clause({-1})};
    Assignment a(1);
    a.set(1, true);
    CHECK(evaluate(f, a) == EvalResult::Unsatisfied);

    Assignment unset(1);
    CHECK(evaluate(f, unset) == EvalResult::Undetermined);
}

TEST_CASE("evaluate is monotone under assignment extension") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Formula f;
        f.n = 8;
        for (int i = 0; i < 12; ++i) f.clauses.push_back(random_clause(f.n, 3, rng));
        Assignment a(f.n);
        EvalResult prev = evaluate(f, a);
        // extend one variable at a time
        for (int v = 1; v <= f.n; ++v) {
            a.set(v, rng.coin());
            const EvalResult cur = evaluate(f, a);
            if (prev == EvalResult::Satisfied) CHECK(cur == EvalResult::Satisfied);
            if (prev == EvalResult::Unsatisfied) CHECK(cur == EvalResult::Unsatisfied);
            prev = cur;
        }
        CHECK(prev != EvalResult::Undetermined);
    }
}

TEST_CASE("dimacs parse basics") {
    const Formula f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
    CHECK(f.n == 2);
    REQUIRE(f.m() == 1);
    CHECK(f.clauses[0] == clause({1, -2}));
    CHECK(f.width == 2);
}

TEST_CASE("dimacs accepts comments and multi-line clauses") {
    const Formula f = parse_dimacs("c hello\np cnf 3 2\n1 2\n3 0\nc mid\n-1 -3 0\n");
    REQUIRE(f.m() == 2);
    CHECK(f.clauses[0] == clause({1, 2, 3}));
}

TEST_CASE("dimacs errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 1 1\n3 0\n"),
                         doctest::Contains("line 2"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), DimacsError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 2 1\n1 -2\n"),
                         doctest::Contains("unterminated"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), DimacsError);
}

TEST_CASE("dimacs round trip is the identity on random formulas") {
    Rng rng(2024);
    GenConfig cfg;
    cfg.n = 30;
    cfg.k = 3;
    cfg.m = 100;
    cfg.t = 2;
    cfg.rule = ChoiceRule::most_positive();
    cfg.seed = 77;
    const Formula f = generate(cfg);
    const Formula back = parse_dimacs(emit_dimacs(f));
    CHECK(same_formula(f, back));
}

TEST_CASE("validate rejects broken invariants") {
    Formula f;
    f.n = 2;
    f.clauses = {clause({1, 3})};
    CHECK_THROWS_AS(validate(f), std::invalid_argument);
    f.clauses = {clause({1, -1})};
    CHECK_THROWS_AS(validate(f), std::invalid_argument);
    f.clauses = {clause({1, 2})};
    CHECK_NOTHROW(validate(f));
}
