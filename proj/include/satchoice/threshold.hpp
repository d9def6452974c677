#pragma once

namespace satchoice {

// Critical density of biased random 2-SAT with clause-type probabilities
// (p0, p1, p2): alpha* = 1 / (p1 + 2 sqrt(p0 p2)).
double two_sat_threshold(double p0, double p1, double p2);

// Closed form for the 2-SAT threshold after reducing the most-positive of
// t random k-clauses to its two most positive literals.
double choice_two_sat_alpha(int k, int t);

// Density amplification of the subcube strategy: (1 - (1 - a^k)^t) / a.
double lowering_gamma(double a, int k, int t);

struct OptimalLowering {
    double a;
    double gamma;
};

// Maximizes gamma over a in (0,1); closed form for t = 2, golden-section
// search otherwise.
OptimalLowering optimal_a(int k, int t);

// Smallest t whose optimal gamma exceeds gamma_k.
int min_choices_to_lower(int k, double gamma_k);

}  // namespace satchoice
