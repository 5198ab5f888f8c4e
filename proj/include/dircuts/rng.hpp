#pragma once

#include <cstdint>

namespace dircuts {

// Deterministic pseudo-random generator (splitmix64).  Used instead of
// <random> distributions so that seeded runs produce identical output on
// every platform and standard library.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound).  bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // True with probability p (0 <= p <= 1).
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }
};

}  // namespace dircuts
