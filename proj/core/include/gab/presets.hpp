#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gab/baselines.hpp"
#include "gab/ga_engine.hpp"
#include "gab/problems.hpp"

namespace gab {

/// Published experiment settings: tuned hyperparameters, tuning grids and the
/// fixed-seed task sets used by the table recipes.
namespace presets {

struct Hyperparameters {
    std::size_t population_size = 0;
    double mutation_rate = 0.0;
    std::size_t elite_count = 1;
};

struct Grid {
    std::vector<std::size_t> population_sizes;
    std::vector<double> mutation_rates;
};

/// Flip-Flop sizes 7, 14, 28 and 1000. Strategy kNone is the plain GA; any
/// other value reads the border-trade row.
std::optional<Hyperparameters> flipflop(std::size_t size, StrategyKind strategy);
std::optional<Grid> flipflop_grid(std::size_t size);

/// Job scheduling sizes 3, 7, 10, 13, 18 and 108.
std::optional<Hyperparameters> jobsched(std::size_t size, StrategyKind strategy);
std::optional<Grid> jobsched_grid(std::size_t size);

/// Mutation semantics used by every table recipe.
inline constexpr MutationMode kMutation = MutationMode::kPerIndividual;

/// A SolverConfig carrying the recipe's hyperparameters and mutation mode.
SolverConfig solver_config(const Hyperparameters& hp, StrategyKind strategy);

/// Task generator and seed behind every table task set. The seed is the
/// smallest one whose size-3 set peaks at 180 and whose sets up to size 18 all
/// carry a repeated-task certificate.
TaskGeneratorConfig task_generator();
inline constexpr std::uint64_t kTaskSeed = 6341;

/// generate_tasks(n, kTaskSeed, task_generator()).
TaskSet task_set(std::size_t n);

/// The table task set wrapped as a problem, with its certified optimum when
/// one is available (see certified_optimum()).
JobSchedulingProblem jobsched_problem(std::size_t n);

/// Annealing schedule used for the Flip-Flop baseline rows.
SAConfig annealing();

}  // namespace presets
}  // namespace gab
