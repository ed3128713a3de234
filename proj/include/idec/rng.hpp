#pragma once

#include <cstdint>
#include <random>

namespace idec {

// Seed mixing for derived RNG streams. Every stochastic routine in the
// library derives its stream as mix_seed(parent, child_index), so results
// are a pure function of the master seed and never depend on call order
// or thread scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t child) {
    return splitmix64(splitmix64(parent) ^ (child + 0x632BE59BD9B4E019ULL));
}

// mt19937_64 wrapper with portable bounded-integer and unit-interval draws.
// std::uniform_int_distribution is implementation-defined, so we roll the
// conversions ourselves to keep output byte-stable across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps
    // the draw exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace idec
