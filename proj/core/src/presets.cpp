#include "gab/presets.hpp"

namespace gab::presets {

std::optional<Hyperparameters> flipflop(std::size_t size, StrategyKind strategy) {
    const bool trades = strategy != StrategyKind::kNone;
    switch (size) {
        case 7: return Hyperparameters{3, 0.4};
        case 14: return Hyperparameters{5, 0.5};
        case 28: return Hyperparameters{16, trades ? 0.2 : 0.1};
        // Size-1 elitism stalls near 815 here; a tenth of the population survives.
        case 1000: return Hyperparameters{150, 0.08, 15};
        default: return std::nullopt;
    }
}

std::optional<Grid> flipflop_grid(std::size_t size) {
    switch (size) {
        case 7: return Grid{{3, 5}, {0.4, 0.5}};
        case 14: return Grid{{5, 10}, {0.4, 0.5}};
        case 28: return Grid{{16, 18}, {0.1, 0.2}};
        case 1000: return Grid{{20, 50, 100, 150}, {0.1, 0.08}};
        default: return std::nullopt;
    }
}

std::optional<Hyperparameters> jobsched(std::size_t size, StrategyKind strategy) {
    const bool trades = strategy != StrategyKind::kNone;
    switch (size) {
        case 3: return Hyperparameters{trades ? 5u : 4u, 0.08};
        case 7: return Hyperparameters{trades ? 50u : 60u, 0.08};
        case 10: return trades ? Hyperparameters{40, 0.07} : Hyperparameters{60, 0.08};
        case 13: return Hyperparameters{trades ? 50u : 60u, 0.08};
        case 18: return Hyperparameters{60, 0.08};
        case 108: return Hyperparameters{50, 0.08};
        default: return std::nullopt;
    }
}

std::optional<Grid> jobsched_grid(std::size_t size) {
    switch (size) {
        case 3: return Grid{{2, 4, 5}, {0.1, 0.08}};
        case 7:
        case 10:
        case 13:
        case 18: return Grid{{40, 50, 60}, {0.07, 0.08}};
        default: return std::nullopt;
    }
}

SolverConfig solver_config(const Hyperparameters& hp, StrategyKind strategy) {
    SolverConfig cfg;
    cfg.population_size = hp.population_size;
    cfg.mutation_rate = hp.mutation_rate;
    cfg.elite_count = hp.elite_count;
    cfg.strategy = strategy;
    cfg.mutation_mode = kMutation;
    return cfg;
}

TaskGeneratorConfig task_generator() {
    TaskGeneratorConfig cfg;
    cfg.profit_max = 100;
    return cfg;
}

TaskSet task_set(std::size_t n) { return generate_tasks(n, kTaskSeed, task_generator()); }

JobSchedulingProblem jobsched_problem(std::size_t n) {
    TaskSet tasks = task_set(n);
    const auto optimum = certified_optimum(tasks);
    return JobSchedulingProblem(std::move(tasks),
                                optimum ? std::optional<double>(static_cast<double>(*optimum)) : std::nullopt);
}

SAConfig annealing() {
    SAConfig cfg;
    cfg.initial_temperature = 1.0;
    return cfg;
}

}  // namespace gab::presets
