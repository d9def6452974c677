#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace satchoice {

// A literal is a signed variable reference, DIMACS style: +v or -v, v >= 1.
struct Literal {
    int var = 0;
    bool positive = true;

    int encoded() const { return positive ? var : -var; }
    static Literal from_encoded(int e) { return {std::abs(e), e > 0}; }
    Literal negated() const { return {var, !positive}; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
    std::vector<Literal> literals;

    int width() const { return static_cast<int>(literals.size()); }

    friend bool operator==(const Clause&, const Clause&) = default;
};

inline int positive_count(const Clause& c) {
    int count = 0;
    for (const Literal& lit : c.literals) count += lit.positive ? 1 : 0;
    return count;
}

// CNF formula: clause multiset (duplicates permitted) over variables 1..n.
// width == 0 means mixed widths.
struct Formula {
    int n = 0;
    int width = 0;
    std::vector<Clause> clauses;

    int m() const { return static_cast<int>(clauses.size()); }
    double alpha() const { return n == 0 ? 0.0 : static_cast<double>(m()) / n; }
};

enum class Truth : std::int8_t { Unset = 0, True = 1, False = -1 };

struct Assignment {
    std::vector<Truth> values;  // values[v], index 0 unused

    explicit Assignment(int n = 0) : values(static_cast<std::size_t>(n) + 1, Truth::Unset) {}

    Truth operator[](int var) const { return values[static_cast<std::size_t>(var)]; }
    void set(int var, bool value) {
        values[static_cast<std::size_t>(var)] = value ? Truth::True : Truth::False;
    }
    bool satisfies(const Literal& lit) const {
        const Truth t = values[static_cast<std::size_t>(lit.var)];
        return t != Truth::Unset && (t == Truth::True) == lit.positive;
    }
    bool falsifies(const Literal& lit) const {
        const Truth t = values[static_cast<std::size_t>(lit.var)];
        return t != Truth::Unset && (t == Truth::True) != lit.positive;
    }
};

enum class EvalResult { Satisfied, Unsatisfied, Undetermined };

inline EvalResult evaluate(const Formula& f, const Assignment& a) {
    bool all_satisfied = true;
    for (const Clause& c : f.clauses) {
        bool clause_sat = false;
        bool clause_falsified = true;
        for (const Literal& lit : c.literals) {
            if (a.satisfies(lit)) {
                clause_sat = true;
                clause_falsified = false;
                break;
            }
            if (!a.falsifies(lit)) clause_falsified = false;
        }
        if (clause_falsified) return EvalResult::Unsatisfied;
        if (!clause_sat) all_satisfied = false;
    }
    return all_satisfied ? EvalResult::Satisfied : EvalResult::Undetermined;
}

// Order-insensitive clause multiset equality, for round-trip checks.
bool same_formula(const Formula& a, const Formula& b);

void validate(const Formula& f);  // throws std::invalid_argument on broken invariants

}  // namespace satchoice
