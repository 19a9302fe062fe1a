#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>

#include "gab/ga_engine.hpp"
#include "gab/problems.hpp"
#include "gab/rng.hpp"

namespace gab {

struct SAConfig {
    double initial_temperature = 10.0;
    double decay = 0.99;
    double min_temperature = 1e-3;
    std::size_t max_iterations = 2048;
    std::size_t max_attempts = 500;
    std::uint64_t seed = 0;
    bool stop_at_known_optimum = true;

    void validate() const;
    bool operator==(const SAConfig&) const = default;
};

/// Metropolis rule for maximisation: never rejects a non-negative change and
/// takes a loss `delta` < 0 with probability exp(delta / temperature).
bool metropolis_accept(double delta, double temperature, Rng& rng);

/// Single-state annealer over one-gene neighbours with geometric cooling
/// (T <- max(T * decay, min_temperature) after every iteration). The curve
/// records the current state's fitness; the best state seen drives the
/// attempts counter and the known-optimum stop, exactly as in evolve().
/// One FEval per neighbour plus one for the initial state.
template <EvolvableProblem P>
RunTrace<typename P::Chromosome> simulated_annealing(const P& problem, const SAConfig& cfg, Rng& rng) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    auto current = problem.random_individual(rng);
    double current_fitness = problem.fitness(current);
    std::uint64_t fevals = 1;

    RunTrace<typename P::Chromosome> trace;
    trace.best = current;
    trace.best_fitness = current_fitness;
    trace.records.push_back({0, current_fitness, fevals, elapsed()});

    const auto optimum = problem.known_optimum();
    const auto at_optimum = [&] {
        return cfg.stop_at_known_optimum && optimum && trace.best_fitness >= *optimum;
    };
    if (at_optimum()) {
        trace.reason = TerminationReason::kConvergedBudget;
        return trace;
    }

    const std::size_t n = problem.length();
    double temperature = cfg.initial_temperature;
    std::size_t attempts = 0;
    for (std::size_t iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
        auto neighbour = current;
        problem.mutate_gene(neighbour, static_cast<std::size_t>(rng.uniform_int(0, n - 1)), rng);
        const double neighbour_fitness = problem.fitness(neighbour);
        ++fevals;
        if (metropolis_accept(neighbour_fitness - current_fitness, temperature, rng)) {
            current = std::move(neighbour);
            current_fitness = neighbour_fitness;
        }
        if (current_fitness > trace.best_fitness) {
            trace.best_fitness = current_fitness;
            trace.best = current;
            attempts = 0;
        } else {
            ++attempts;
        }
        temperature = std::max(temperature * cfg.decay, cfg.min_temperature);

        trace.records.push_back({iteration, current_fitness, fevals, elapsed()});
        trace.termination_iteration = iteration;
        if (at_optimum()) {
            trace.reason = TerminationReason::kConvergedBudget;
            return trace;
        }
        if (attempts >= cfg.max_attempts) {
            trace.reason = TerminationReason::kAttemptsExhausted;
            return trace;
        }
    }
    trace.reason = TerminationReason::kIterationLimit;
    return trace;
}

/// Result of a brute-force sweep over task sequences.
struct OracleResult {
    std::int64_t max_profit = 0;
    TaskSequence witness;       // first maximiser in enumeration order
    std::uint64_t enumerated = 0;
};

/// Largest task set the exhaustive oracle accepts (6^6 = 46,656 sequences).
inline constexpr std::size_t kExhaustiveOracleLimit = 6;

/// Enumerates all n^n sequences in lexicographic order. Throws InvalidInput
/// for n > kExhaustiveOracleLimit.
OracleResult exhaustive_schedule_oracle(std::span<const Task> tasks);

/// Evaluates `budget` sequences in lexicographic order starting at the
/// identity sequence, wrapping after (n-1, ..., n-1).
OracleResult sampled_oracle(std::span<const Task> tasks, std::uint64_t budget);

/// Every gene earns at most the largest task profit, so when n copies of a
/// most-profitable task all meet the deadline, n * max_profit is optimal.
/// Returns that value, or nullopt when no such task fits n times.
std::optional<std::int64_t> repeated_task_certificate(std::span<const Task> tasks);

/// Exhaustive maximum for n <= kExhaustiveOracleLimit, otherwise the
/// repeated-task certificate.
std::optional<std::int64_t> certified_optimum(std::span<const Task> tasks);

}  // namespace gab
