#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "satchoice/formula.hpp"
#include "satchoice/rng.hpp"

namespace satchoice {

// On-line choice strategy applied to each batch of t candidate clauses.
struct ChoiceRule {
    enum class Kind { MostPositive, SubcubePreference, Uniform };

    Kind kind = Kind::MostPositive;
    double subcube_a = 0.0;  // SubcubePreference only, 0 < a < 1

    static ChoiceRule most_positive() { return {Kind::MostPositive, 0.0}; }
    static ChoiceRule uniform() { return {Kind::Uniform, 0.0}; }
    static ChoiceRule subcube(double a);

    // "most-positive" | "subcube:<a>" | "uniform"
    static ChoiceRule parse(const std::string& text);
    std::string to_string() const;
};

struct GenConfig {
    int n = 0;
    int k = 0;
    int m = 0;           // derived from alpha when alpha > 0
    double alpha = 0.0;  // informational once m is fixed
    int t = 1;
    ChoiceRule rule;
    std::uint64_t seed = 0;

    static GenConfig with_alpha(int n, int k, double alpha, int t, ChoiceRule rule,
                                std::uint64_t seed);
    void check() const;

    std::string to_json() const;
    static GenConfig from_json(const std::string& text);
};

// k distinct uniform variables in 1..n, each sign a fair coin.
Clause random_clause(int n, int k, Rng& rng);

// Applies the rule to one candidate batch. Uniform takes the first candidate;
// MostPositive breaks ties uniformly; SubcubePreference(a) over n variables
// prefers candidates entirely inside U = {x_1..x_floor(an)}.
const Clause& choose(std::span<const Clause> candidates, const ChoiceRule& rule, int n,
                     Rng& rng);

Formula generate(const GenConfig& cfg);

// Keeps the ell most positive literals: all positives plus uniformly chosen
// negatives when positives are scarce, a uniform positive subset otherwise.
Clause reduce_most_positive(const Clause& c, int ell, Rng& rng);

Formula reduce_most_positive(const Formula& f, int ell, Rng& rng);

// Clauses entirely inside U = {x_1..x_floor(an)}, as a formula on n' = floor(an).
Formula subformula_in_U(const Formula& f, double a);

}  // namespace satchoice
