#include "satchoice/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace satchoice {

PositiveProfile positive_profile(int k, int t, int cap) {
    if (k < 1 || t < 1 || cap < 1 || cap > k)
        throw std::invalid_argument("positive_profile: need k >= 1, t >= 1, 1 <= cap <= k");

    // Binomial(k, 1/2) CDF, summed in extended precision to keep the
    // normalization residual below 1e-12 for k up to ~60.
    std::vector<double> cdf(static_cast<std::size_t>(k) + 1);
    long double binom = 1.0L;  // C(k, 0)
    long double sum = 0.0L;
    const long double scale = std::pow(0.5L, k);
    for (int j = 0; j <= k; ++j) {
        sum += binom * scale;
        cdf[static_cast<std::size_t>(j)] = static_cast<double>(sum);
        binom = binom * (k - j) / (j + 1);
    }

    PositiveProfile profile{k, t, cap, std::vector<double>(static_cast<std::size_t>(cap) + 1)};
    double prev = 0.0;
    for (int j = 0; j < cap; ++j) {
        const double cur = std::pow(cdf[static_cast<std::size_t>(j)], t);
        profile.p[static_cast<std::size_t>(j)] = cur - prev;
        prev = cur;
    }
    profile.p[static_cast<std::size_t>(cap)] = 1.0 - prev;
    return profile;
}

}  // namespace satchoice
