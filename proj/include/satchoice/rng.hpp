#pragma once

#include <cstdint>
#include <initializer_list>

namespace satchoice {

// SplitMix64 step; used both as a stream-derivation hash and to seed xoshiro.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via SplitMix64. Deterministic across platforms,
// unlike std::uniform_int_distribution, so generated formulas and sweep
// CSVs are bit-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin() { return (next_u64() >> 63) != 0; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Stream derivation rule: fold each index into the master seed with one
// SplitMix64 step. Distinct index tuples yield independent streams, so
// (seed), (seed, trial) and (seed, density, trial) never collide in practice.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> indices) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    for (std::uint64_t idx : indices) {
        s = h ^ (idx + 0x9e3779b97f4a7c15ULL);
        h = splitmix64(s);
    }
    return h;
}

inline Rng derive_stream(std::uint64_t master,
                         std::initializer_list<std::uint64_t> indices) {
    return Rng(derive_seed(master, indices));
}

}  // namespace satchoice
