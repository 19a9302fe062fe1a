#pragma once

#include <random>
#include <string>

#include "gab/problems.hpp"
#include "gab/rng.hpp"

namespace fixtures {

// The five-task illustration: (duration, deadline, profit).
inline gab::TaskSet figure_tasks() {
    return {{0, 5, 6, 8}, {1, 4, 7, 7}, {2, 3, 8, 6}, {3, 2, 9, 5}, {4, 1, 10, 4}};
}

inline gab::BitString random_bits(std::size_t n, gab::Rng& rng) {
    gab::BitString b;
    b.bits.resize(n);
    for (auto& x : b.bits) x = static_cast<std::uint8_t>(rng.uniform_int(0, 1));
    return b;
}

inline gab::TaskSequence random_sequence(std::size_t n, gab::Rng& rng) {
    gab::TaskSequence s;
    s.genes.resize(n);
    for (auto& g : s.genes) g = static_cast<std::uint32_t>(rng.uniform_int(0, n - 1));
    return s;
}

// Small hand-rolled task sets with tight deadlines, so rejection is common.
inline gab::TaskSet random_tasks(std::size_t n, gab::Rng& rng) {
    gab::TaskSet t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i].id = static_cast<std::uint32_t>(i);
        t[i].duration = static_cast<std::int64_t>(rng.uniform_int(1, 5));
        t[i].deadline = t[i].duration + static_cast<std::int64_t>(rng.uniform_int(0, 3 * n));
        t[i].profit = static_cast<std::int64_t>(rng.uniform_int(0, 30));
    }
    return t;
}

}  // namespace fixtures
