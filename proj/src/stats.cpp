#include "satchoice/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace satchoice {

WilsonInterval wilson95(long successes, long trials) {
    if (trials < 1 || successes < 0 || successes > trials)
        throw std::invalid_argument("wilson95: need 0 <= successes <= trials, trials >= 1");
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = phat + z2 / (2.0 * n);
    const double spread = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    return {(center - spread) / denom, (center + spread) / denom};
}

ChiSquareResult chi_square_test(const std::vector<long>& observed,
                                const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_test: need matching categories, at least 2");
    long total = 0;
    for (long count : observed) {
        if (count < 0) throw std::invalid_argument("chi_square_test: negative count");
        total += count;
    }
    if (total < 1) throw std::invalid_argument("chi_square_test: empty sample");

    ChiSquareResult result;
    result.dof = static_cast<int>(observed.size()) - 1;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = expected_probs[i] * static_cast<double>(total);
        if (expected_probs[i] <= 0.0) {
            if (observed[i] > 0)
                throw std::invalid_argument(
                    "chi_square_test: observations in a zero-probability category");
            continue;
        }
        const double diff = static_cast<double>(observed[i]) - expected;
        result.statistic += diff * diff / expected;
    }
    const boost::math::chi_squared dist(result.dof);
    result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
    return result;
}

ChiSquareResult profile_check(const std::vector<long>& counts, const PositiveProfile& expected) {
    if (counts.size() != expected.p.size())
        throw std::invalid_argument("profile_check: counts must have cap + 1 categories");
    long total = 0;
    for (long count : counts) total += count;
    if (total < 1000) throw std::invalid_argument("profile_check: need at least 1000 samples");
    return chi_square_test(counts, expected.p);
}

}  // namespace satchoice
