#include "gab/ga_engine.hpp"

#include <cmath>

namespace gab {

std::string to_string(FevalAccounting a) {
    return a == FevalAccounting::kPerGeneration ? "per-generation" : "every-evaluation";
}

std::string to_string(MutationMode m) { return m == MutationMode::kPerGene ? "per-gene" : "per-individual"; }

FevalAccounting parse_accounting(std::string_view text) {
    if (text == "per-generation") return FevalAccounting::kPerGeneration;
    if (text == "every-evaluation") return FevalAccounting::kEveryEvaluation;
    throw InvalidInput("unknown FEval accounting '" + std::string(text) + "'");
}

MutationMode parse_mutation_mode(std::string_view text) {
    if (text == "per-gene") return MutationMode::kPerGene;
    if (text == "per-individual") return MutationMode::kPerIndividual;
    throw InvalidInput("unknown mutation mode '" + std::string(text) + "'");
}

std::string to_string(TerminationReason r) {
    switch (r) {
        case TerminationReason::kConvergedBudget: return "converged-budget";
        case TerminationReason::kAttemptsExhausted: return "attempts-exhausted";
        case TerminationReason::kIterationLimit: return "iteration-limit";
    }
    return "iteration-limit";
}

void SolverConfig::validate() const {
    if (population_size < 2) throw ConfigError("population_size must be at least 2");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw ConfigError("mutation_rate must lie in [0, 1]");
    if (max_iterations < 1) throw ConfigError("max_iterations must be positive");
    if (max_attempts < 1) throw ConfigError("max_attempts must be positive");
    if (elite_count < 1 || elite_count >= population_size)
        throw ConfigError("elite_count must lie in [1, population_size)");
}

std::pair<std::size_t, std::size_t> select_parents(std::span<const double> fitnesses, Rng& rng) {
    if (fitnesses.empty()) throw InvalidInput("cannot select parents from an empty population");
    double total = 0.0;
    for (double f : fitnesses) {
        if (!(f >= 0.0) || !std::isfinite(f)) throw InvalidInput("selection needs finite non-negative fitness");
        total += f;
    }
    const std::size_t n = fitnesses.size();
    const auto draw = [&]() -> std::size_t {
        if (total <= 0.0) return static_cast<std::size_t>(rng.uniform_int(0, n - 1));
        const double target = rng.uniform01() * total;
        double running = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            running += fitnesses[i];
            if (target < running) return i;
        }
        // Rounding can leave target just above the final partial sum.
        for (std::size_t i = n; i-- > 0;)
            if (fitnesses[i] > 0.0) return i;
        return n - 1;
    };
    const std::size_t first = draw();
    return {first, draw()};
}

BitString one_point_crossover(const BitString& p1, const BitString& p2, std::size_t cut) {
    return BitString(one_point_crossover<std::uint8_t>(p1.bits, p2.bits, cut));
}

TaskSequence one_point_crossover(const TaskSequence& p1, const TaskSequence& p2, std::size_t cut) {
    return TaskSequence{one_point_crossover<std::uint32_t>(p1.genes, p2.genes, cut)};
}

std::size_t draw_cut(std::size_t length, Rng& rng) {
    if (length < 2) return 0;
    return static_cast<std::size_t>(rng.uniform_int(1, length - 1));
}

}  // namespace gab
