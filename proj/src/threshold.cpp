#include "satchoice/threshold.hpp"

#include <cmath>
#include <stdexcept>

namespace satchoice {

double two_sat_threshold(double p0, double p1, double p2) {
    if (p0 < 0.0 || p1 < 0.0 || p2 < 0.0)
        throw std::invalid_argument("two_sat_threshold: negative probability");
    if (std::abs(p0 + p1 + p2 - 1.0) > 1e-9)
        throw std::invalid_argument("two_sat_threshold: probabilities must sum to 1");
    return 1.0 / (p1 + 2.0 * std::sqrt(p0 * p2));
}

double choice_two_sat_alpha(int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("choice_two_sat_alpha: need k >= 2, t >= 1");
    const double half_kt = 0.5 * k * t;
    const double u = std::pow(std::exp2(-k) * (k + 1), t);  // F(1)^t
    return std::exp2(half_kt) /
           (std::exp2(-half_kt) * (std::pow(static_cast<double>(k) + 1, t) - 1.0) +
            2.0 * std::sqrt(1.0 - u));
}

double lowering_gamma(double a, int k, int t) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("lowering_gamma: need 0 < a <= 1");
    if (k < 2 || t < 1) throw std::invalid_argument("lowering_gamma: need k >= 2, t >= 1");
    return (1.0 - std::pow(1.0 - std::pow(a, k), t)) / a;
}

OptimalLowering optimal_a(int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("optimal_a: need k >= 2, t >= 1");
    if (t == 2) {
        const double a = std::pow((2.0 * k - 2.0) / (2.0 * k - 1.0), 1.0 / k);
        const double gamma = 4.0 * k * (k - 1.0) / ((2.0 * k - 1.0) * (2.0 * k - 1.0)) *
                             std::pow((2.0 * k - 1.0) / (2.0 * k - 2.0), 1.0 / k);
        return {a, gamma};
    }
    // golden-section search; gamma is unimodal in a on (0,1)
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 1e-6, hi = 1.0 - 1e-6;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = lowering_gamma(x1, k, t);
    double f2 = lowering_gamma(x2, k, t);
    while (hi - lo > 1e-8) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = lowering_gamma(x2, k, t);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = lowering_gamma(x1, k, t);
        }
    }
    const double a = (lo + hi) / 2.0;
    return {a, lowering_gamma(a, k, t)};
}

int min_choices_to_lower(int k, double gamma_k) {
    if (gamma_k < 1.0) throw std::invalid_argument("min_choices_to_lower: gamma_k must be >= 1");
    for (int t = 1;; ++t) {
        if (optimal_a(k, t).gamma > gamma_k) return t;
        if (t > 10000) throw std::runtime_error("min_choices_to_lower: no t found");
    }
}

}  // namespace satchoice
