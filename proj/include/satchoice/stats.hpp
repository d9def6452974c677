#pragma once

#include <vector>

#include "satchoice/profile.hpp"

namespace satchoice {

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

// 95% Wilson score interval for successes out of trials.
WilsonInterval wilson95(long successes, long trials);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int dof = 0;
};

// Pearson chi-square of observed category counts against expected
// probabilities; p-value from the chi-square tail with (categories - 1)
// degrees of freedom. A zero-probability category with observations fails.
ChiSquareResult chi_square_test(const std::vector<long>& observed,
                                const std::vector<double>& expected_probs);

// Goodness of fit of sampled positive-literal counts against a profile.
ChiSquareResult profile_check(const std::vector<long>& counts, const PositiveProfile& expected);

}  // namespace satchoice
