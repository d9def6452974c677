#pragma once

#include <vector>

namespace satchoice {

// Distribution of the positive-literal count of the chosen clause after the
// most-positive rule over t candidates, optionally capped at a reduced width.
struct PositiveProfile {
    int k = 0;
    int t = 1;
    int cap = 0;               // reduced width ell, 1 <= cap <= k
    std::vector<double> p;     // p[0..cap]
};

// With F(j) the Binomial(k,1/2) CDF: p[j] = F(j)^t - F(j-1)^t for j < cap,
// and p[cap] = 1 - F(cap-1)^t aggregating every count >= cap.
PositiveProfile positive_profile(int k, int t, int cap);

}  // namespace satchoice
