#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gab/baselines.hpp"
#include "gab/border_trades.hpp"
#include "gab/ga_engine.hpp"

namespace gab {

/// Per-iteration mean/std over k runs (population std, ddof = 0). Runs that
/// stop early are forward-filled with their final record.
struct BatchStats {
    std::vector<double> mean_fitness, std_fitness;
    std::vector<double> mean_fevals, std_fevals;
    std::vector<double> mean_time, std_time;
    std::vector<std::size_t> termination_iterations;
    std::vector<TerminationReason> termination_reasons;
    std::vector<double> best_fitness;  // elite fitness of each run
    bool forward_filled = false;

    std::size_t length() const { return mean_fitness.size(); }
    std::size_t runs() const { return termination_iterations.size(); }
};

/// Aligns the curves by forward-fill and reduces them. Throws on an empty input.
BatchStats aggregate(std::span<const std::vector<TraceRecord>> runs);

/// Runs `run_one(seed)` for seeds base_seed .. base_seed + k - 1 and aggregates.
template <class RunOne>
BatchStats run_batch_with(std::size_t k, std::uint64_t base_seed, RunOne&& run_one) {
    if (k < 1) throw ConfigError("a batch needs at least one run");
    std::vector<std::vector<TraceRecord>> curves;
    std::vector<std::size_t> iterations;
    std::vector<TerminationReason> reasons;
    std::vector<double> best;
    curves.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto trace = run_one(base_seed + i);
        iterations.push_back(trace.termination_iteration);
        reasons.push_back(trace.reason);
        best.push_back(trace.best_fitness);
        curves.push_back(std::move(trace.records));
    }
    BatchStats stats = aggregate(curves);
    stats.termination_iterations = std::move(iterations);
    stats.termination_reasons = std::move(reasons);
    stats.best_fitness = std::move(best);
    return stats;
}

/// k GA runs of `cfg` (strategy hooks included); cfg.seed is ignored.
template <class P>
BatchStats run_batch(const P& problem, SolverConfig cfg, std::size_t k, std::uint64_t base_seed) {
    return run_batch_with(k, base_seed, [&](std::uint64_t seed) {
        cfg.seed = seed;
        return solve(problem, cfg);
    });
}

template <class P>
BatchStats run_sa_batch(const P& problem, SAConfig cfg, std::size_t k, std::uint64_t base_seed) {
    return run_batch_with(k, base_seed, [&](std::uint64_t seed) {
        cfg.seed = seed;
        Rng rng(seed);
        return simulated_annealing(problem, cfg, rng);
    });
}

struct ConvergenceReport {
    double target = 0.0;
    std::optional<std::size_t> converged_at;
    std::optional<std::size_t> semi_converged_at;

    bool converged() const { return converged_at.has_value(); }
    bool semi_converged() const { return semi_converged_at.has_value(); }
};

/// Allowed shortfall below the target after convergence / semi-convergence.
inline constexpr double kConvergenceSlack = 0.5;
inline constexpr double kSemiConvergenceSlack = 1.0;

/// Converged at the first index whose value reaches `target` and after which
/// the curve never falls more than 0.5 below it. Semi-converged at the first
/// index from which the curve stays within 1.0 of the target.
ConvergenceReport detect_convergence(std::span<const double> mean_curve, double target);

struct ElbowPoint {
    std::size_t index = 0;
    double fitness = 0.0;
    double std_dev = 0.0;
    bool degenerate = false;
};

/// Kneedle-style turning point: the index farthest from the chord between the
/// first and last samples after min-max normalising both axes. Ties go to the
/// smaller index. A constant or straight curve yields index 0, degenerate.
ElbowPoint detect_elbow(std::span<const double> mean_curve);
ElbowPoint detect_elbow(const BatchStats& stats);

/// Convergence metrics read off the mean curves at the convergence index.
struct ConvergenceSummary {
    ConvergenceReport report;
    double mean_fevals = 0.0;
    double mean_time = 0.0;
    double max_mean_fitness = 0.0;
};

ConvergenceSummary summarize(const BatchStats& stats, double target);

struct GridRow {
    std::size_t population_size = 0;
    double mutation_rate = 0.0;
    double best_fitness = 0.0;
    std::uint64_t fevals = 0;
    std::size_t iterations = 0;
    double time_s = 0.0;
};

/// Rows ranked best first; `winners` holds every row tied with the first.
struct GridResult {
    std::vector<GridRow> rows;
    std::vector<GridRow> winners;
};

/// Ranks rows by fitness (desc), then FEvals, then iterations (asc). Wall time
/// is reported but never ranked, so the ordering is reproducible.
GridResult rank_grid(std::vector<GridRow> rows);

/// One run per (population size, mutation rate) cell at `base_seed`.
template <class P>
GridResult grid_tune(const P& problem, std::span<const std::size_t> population_sizes,
                     std::span<const double> mutation_rates, SolverConfig base, std::uint64_t base_seed) {
    if (population_sizes.empty() || mutation_rates.empty()) throw ConfigError("grids must be non-empty");
    std::vector<GridRow> rows;
    for (std::size_t pop : population_sizes) {
        for (double rate : mutation_rates) {
            SolverConfig cfg = base;
            cfg.population_size = pop;
            cfg.mutation_rate = rate;
            cfg.seed = base_seed;
            const auto trace = solve(problem, cfg);
            rows.push_back({pop, rate, trace.best_fitness, trace.total_fevals(), trace.termination_iteration,
                            trace.records.back().time_s});
        }
    }
    return rank_grid(std::move(rows));
}

}  // namespace gab
