#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace gab {

/// Seeded 64-bit engine with platform-stable integer and real draws.
///
/// The std distributions are implementation-defined, so frozen seeds in tests
/// and task generators would drift between standard libraries. Everything here
/// is derived from raw mt19937_64 output only.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform integer in [lo, hi], unbiased (rejection on the tail).
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;
        if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return lo + draw % range;
    }

    /// Uniform real in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace gab
