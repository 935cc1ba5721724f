#pragma once

#include <cstdint>

namespace rcf {

/// Counter-based SplitMix64.  Any value of the stream is a pure function of
/// (seed, counter), so prefixes are recomputable without storing state.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Stateless hash of (seed, counter); used by counter-indexed generators.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
        SplitMix64 g(seed + counter * 0x9e3779b97f4a7c15ull);
        return g.next();
    }
};

}  // namespace rcf
