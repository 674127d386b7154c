#pragma once

// Seeded random streams shared by every stochastic component.
//
// std::uniform_*_distribution is implementation-defined, so the helpers below
// derive doubles and bounded integers directly from std::mt19937_64 output.
// Results are therefore identical across standard libraries.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace evoqsi {

/// SplitMix64 finalizer. Stable hash used to derive child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Folds a list of stream labels into a parent seed.
/// derive_seed(s, {a, b}) == splitmix64(splitmix64(s ^ splitmix64(a)) ^ splitmix64(b)).
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> labels) noexcept {
    std::uint64_t h = seed;
    for (std::uint64_t label : labels) {
        h = splitmix64(h ^ splitmix64(label));
    }
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling on the top of the range removes modulo bias
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    /// Uniform integer in [lo, hi] (inclusive).
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace evoqsi
