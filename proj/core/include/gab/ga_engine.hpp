#pragma once

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gab/problems.hpp"
#include "gab/rng.hpp"
#include "gab/strategy_kind.hpp"

namespace gab {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// How the FEval counter is charged.
///
/// kPerGeneration charges one evaluation for the initial population, one per
/// generation for evaluating the offspring pool, plus every explicit fitness
/// call a border trade makes. This is the accounting behind the published
/// FEval columns (roughly one FEval per iteration for a plain GA).
///
/// kEveryEvaluation charges each individual fitness computation and each
/// schedule build done inside a trade.
enum class FevalAccounting { kPerGeneration, kEveryEvaluation };

/// kPerGene flips/resamples each gene independently with the mutation rate.
/// kPerIndividual mutates one uniformly chosen gene with the mutation rate.
enum class MutationMode { kPerGene, kPerIndividual };

std::string to_string(FevalAccounting a);
std::string to_string(MutationMode m);
FevalAccounting parse_accounting(std::string_view text);
MutationMode parse_mutation_mode(std::string_view text);

struct SolverConfig {
    std::size_t population_size = 10;
    double mutation_rate = 0.1;
    std::size_t max_iterations = 2048;
    std::size_t max_attempts = 500;
    StrategyKind strategy = StrategyKind::kNone;
    std::uint64_t seed = 0;
    MutationMode mutation_mode = MutationMode::kPerGene;
    FevalAccounting accounting = FevalAccounting::kPerGeneration;
    bool stop_at_known_optimum = true;
    std::size_t elite_count = 1;  // survivors carried into the next generation

    /// Throws ConfigError on an out-of-range field.
    void validate() const;
    bool operator==(const SolverConfig&) const = default;
};

enum class TerminationReason { kConvergedBudget, kAttemptsExhausted, kIterationLimit };
std::string to_string(TerminationReason r);

struct TraceRecord {
    std::size_t iteration = 0;
    double fitness = 0.0;  // best of the offspring produced this iteration
    std::uint64_t fevals = 0;
    double time_s = 0.0;
};

/// Per-iteration curve of a single run plus its elite. Record 0 is the initial
/// population; record i is generation i.
template <class Chromosome>
struct RunTrace {
    std::vector<TraceRecord> records;
    Chromosome best;
    double best_fitness = 0.0;
    std::size_t termination_iteration = 0;
    TerminationReason reason = TerminationReason::kIterationLimit;

    std::vector<double> fitness_curve() const {
        std::vector<double> out;
        out.reserve(records.size());
        for (const auto& r : records) out.push_back(r.fitness);
        return out;
    }
    std::uint64_t total_fevals() const { return records.empty() ? 0 : records.back().fevals; }
};

/// Work a trade performed, charged to the engine's FEval counter according to
/// the run's FevalAccounting.
struct TradeCost {
    std::uint64_t schedule_builds = 0;
    std::uint64_t fitness_evals = 0;

    TradeCost& operator+=(const TradeCost& o) {
        schedule_builds += o.schedule_builds;
        fitness_evals += o.fitness_evals;
        return *this;
    }
};

/// Optional reproduction hooks. `before_crossover` may rewrite the two parent
/// copies; `after_mutation` may rewrite the child, given a reference chromosome
/// (the previous child of the generation, or the fitter parent for the first).
template <class Chromosome>
struct ReproductionHooks {
    std::function<void(Chromosome& p1, Chromosome& p2, TradeCost& cost)> before_crossover;
    std::function<void(Chromosome& child, const Chromosome& reference, TradeCost& cost)> after_mutation;
};

template <class P>
concept EvolvableProblem = requires(const P& p, const typename P::Chromosome& c, typename P::Chromosome& m,
                                    Rng& rng, std::size_t i) {
    { p.length() } -> std::convertible_to<std::size_t>;
    { p.fitness(c) } -> std::convertible_to<double>;
    { p.random_individual(rng) } -> std::same_as<typename P::Chromosome>;
    { p.mutate_gene(m, i, rng) };
    { p.known_optimum() } -> std::same_as<std::optional<double>>;
};

/// Fitness-proportional draw of two indices (independent, may coincide).
/// All-zero fitness falls back to uniform. Throws on an empty population or a
/// negative fitness.
std::pair<std::size_t, std::size_t> select_parents(std::span<const double> fitnesses, Rng& rng);

/// child = p1[0, cut) ++ p2[cut, n).
template <class Gene>
std::vector<Gene> one_point_crossover(std::span<const Gene> p1, std::span<const Gene> p2, std::size_t cut) {
    if (p1.size() != p2.size()) throw InvalidInput("crossover parents differ in length");
    if (p1.size() >= 2 && (cut < 1 || cut > p1.size() - 1)) throw InvalidInput("crossover cut out of range");
    std::vector<Gene> child(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(cut));
    child.insert(child.end(), p2.begin() + static_cast<std::ptrdiff_t>(cut), p2.end());
    return child;
}

BitString one_point_crossover(const BitString& p1, const BitString& p2, std::size_t cut);
TaskSequence one_point_crossover(const TaskSequence& p1, const TaskSequence& p2, std::size_t cut);

/// Draws the crossover cut uniformly from [1, n-1] (0 when n < 2).
std::size_t draw_cut(std::size_t length, Rng& rng);

template <EvolvableProblem P>
void mutate(const P& problem, typename P::Chromosome& c, double rate, MutationMode mode, Rng& rng) {
    const std::size_t n = problem.length();
    if (mode == MutationMode::kPerGene) {
        for (std::size_t i = 0; i < n; ++i)
            if (rng.bernoulli(rate)) problem.mutate_gene(c, i, rng);
    } else if (rng.bernoulli(rate)) {
        problem.mutate_gene(c, static_cast<std::size_t>(rng.uniform_int(0, n - 1)), rng);
    }
}

/// Generational GA with elitism (size 1 unless configured otherwise).
///
/// Every iteration breeds a full replacement pool: proportional selection,
/// the parent hook, one-point crossover, mutation, then the child hook. The
/// recorded fitness is the best offspring of that iteration, so curves may dip.
/// The fittest `elite_count` of the old population replace the worst
/// offspring; the best-so-far drives the attempts counter.
template <EvolvableProblem P>
RunTrace<typename P::Chromosome> evolve(const P& problem, const SolverConfig& cfg,
                                        const ReproductionHooks<typename P::Chromosome>& hooks, Rng& rng,
                                        std::vector<typename P::Chromosome> initial = {}) {
    using C = typename P::Chromosome;
    cfg.validate();
    const std::size_t pop = cfg.population_size;
    const std::size_t n = problem.length();
    const bool every = cfg.accounting == FevalAccounting::kEveryEvaluation;
    const auto t0 = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::vector<C> population = std::move(initial);
    if (!population.empty() && population.size() != pop)
        throw ConfigError("initial population size does not match population_size");
    if (population.empty()) {
        population.reserve(pop);
        for (std::size_t i = 0; i < pop; ++i) population.push_back(problem.random_individual(rng));
    }
    std::vector<double> fitness(pop);
    for (std::size_t i = 0; i < pop; ++i) fitness[i] = problem.fitness(population[i]);

    RunTrace<C> trace;
    std::uint64_t fevals = every ? pop : 1;
    const auto best0 = static_cast<std::size_t>(std::max_element(fitness.begin(), fitness.end()) - fitness.begin());
    trace.best = population[best0];
    trace.best_fitness = fitness[best0];
    trace.records.push_back({0, fitness[best0], fevals, elapsed()});

    const auto optimum = problem.known_optimum();
    const auto at_optimum = [&] {
        return cfg.stop_at_known_optimum && optimum && trace.best_fitness >= *optimum;
    };
    if (at_optimum()) {
        trace.reason = TerminationReason::kConvergedBudget;
        return trace;
    }

    std::size_t attempts = 0;
    std::vector<C> children;
    std::vector<double> child_fitness(pop);
    std::vector<std::size_t> elite_idx(pop), worst_idx(pop);
    for (std::size_t iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
        children.clear();
        TradeCost cost;
        for (std::size_t k = 0; k < pop; ++k) {
            const auto [a, b] = select_parents(fitness, rng);
            C p1 = population[a];
            C p2 = population[b];
            if (hooks.before_crossover) hooks.before_crossover(p1, p2, cost);
            C child = n >= 2 ? one_point_crossover(p1, p2, draw_cut(n, rng)) : p1;
            mutate(problem, child, cfg.mutation_rate, cfg.mutation_mode, rng);
            if (hooks.after_mutation) {
                const C& reference = k == 0 ? (fitness[a] >= fitness[b] ? population[a] : population[b])
                                            : children.back();
                hooks.after_mutation(child, reference, cost);
            }
            children.push_back(std::move(child));
        }
        for (std::size_t k = 0; k < pop; ++k) child_fitness[k] = problem.fitness(children[k]);
        fevals += every ? pop + cost.schedule_builds + cost.fitness_evals : 1 + cost.fitness_evals;

        const auto best_it = std::max_element(child_fitness.begin(), child_fitness.end());
        const double generation_best = *best_it;
        if (generation_best > trace.best_fitness) {
            trace.best_fitness = generation_best;
            trace.best = children[static_cast<std::size_t>(best_it - child_fitness.begin())];
            attempts = 0;
        } else {
            ++attempts;
        }
        // The previous population always holds the best-so-far, so carrying its
        // top-e over keeps the elite alive.
        const std::size_t e = cfg.elite_count;
        std::iota(elite_idx.begin(), elite_idx.end(), std::size_t{0});
        std::iota(worst_idx.begin(), worst_idx.end(), std::size_t{0});
        std::partial_sort(elite_idx.begin(), elite_idx.begin() + static_cast<std::ptrdiff_t>(e), elite_idx.end(),
                          [&](std::size_t x, std::size_t y) { return fitness[x] > fitness[y]; });
        std::partial_sort(worst_idx.begin(), worst_idx.begin() + static_cast<std::ptrdiff_t>(e), worst_idx.end(),
                          [&](std::size_t x, std::size_t y) { return child_fitness[x] < child_fitness[y]; });
        for (std::size_t i = 0; i < e; ++i) {
            children[worst_idx[i]] = population[elite_idx[i]];
            child_fitness[worst_idx[i]] = fitness[elite_idx[i]];
        }
        std::swap(population, children);
        std::swap(fitness, child_fitness);

        trace.records.push_back({iteration, generation_best, fevals, elapsed()});
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

}  // namespace gab
