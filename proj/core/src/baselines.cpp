#include "gab/baselines.hpp"

namespace gab {

void SAConfig::validate() const {
    if (!(initial_temperature > 0.0)) throw ConfigError("initial_temperature must be positive");
    if (!(decay > 0.0 && decay < 1.0)) throw ConfigError("decay must lie in (0, 1)");
    if (!(min_temperature > 0.0)) throw ConfigError("min_temperature must be positive");
    if (!(min_temperature < initial_temperature))
        throw ConfigError("min_temperature must be below initial_temperature");
    if (max_iterations < 1) throw ConfigError("max_iterations must be positive");
    if (max_attempts < 1) throw ConfigError("max_attempts must be positive");
}

bool metropolis_accept(double delta, double temperature, Rng& rng) {
    if (delta >= 0.0) return true;
    return rng.uniform01() < std::exp(delta / temperature);
}

namespace {

// Advances `genes` to the next sequence in lexicographic order over [0, n).
// Returns false when it wrapped back to all zeros.
bool next_sequence(std::vector<std::uint32_t>& genes, std::uint32_t n) {
    for (std::size_t i = genes.size(); i-- > 0;) {
        if (++genes[i] < n) return true;
        genes[i] = 0;
    }
    return false;
}

void consider(OracleResult& r, const TaskSequence& seq, std::span<const Task> tasks) {
    const auto profit = schedule_fitness(build_schedule(seq, tasks));
    if (r.enumerated == 0 || profit > r.max_profit) {
        r.max_profit = profit;
        r.witness = seq;
    }
    ++r.enumerated;
}

}  // namespace

OracleResult exhaustive_schedule_oracle(std::span<const Task> tasks) {
    if (tasks.empty()) throw InvalidInput("oracle needs at least one task");
    if (tasks.size() > kExhaustiveOracleLimit)
        throw InvalidInput("exhaustive oracle refuses more than " + std::to_string(kExhaustiveOracleLimit) +
                           " tasks");
    validate_tasks(tasks);
    const auto n = static_cast<std::uint32_t>(tasks.size());
    OracleResult r;
    TaskSequence seq;
    seq.genes.assign(n, 0);
    do {
        consider(r, seq, tasks);
    } while (next_sequence(seq.genes, n));
    return r;
}

OracleResult sampled_oracle(std::span<const Task> tasks, std::uint64_t budget) {
    if (tasks.empty()) throw InvalidInput("oracle needs at least one task");
    if (budget < 1) throw InvalidInput("oracle budget must be positive");
    validate_tasks(tasks);
    const auto n = static_cast<std::uint32_t>(tasks.size());
    OracleResult r;
    TaskSequence seq = identity_sequence(n);
    for (std::uint64_t i = 0; i < budget; ++i) {
        consider(r, seq, tasks);
        next_sequence(seq.genes, n);
    }
    return r;
}

std::optional<std::int64_t> repeated_task_certificate(std::span<const Task> tasks) {
    if (tasks.empty()) return std::nullopt;
    validate_tasks(tasks);
    std::int64_t best = 0;
    for (const Task& t : tasks) best = std::max(best, t.profit);
    const auto n = static_cast<std::int64_t>(tasks.size());
    for (std::uint32_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].profit != best) continue;
        TaskSequence repeated;
        repeated.genes.assign(tasks.size(), i);
        if (schedule_fitness(build_schedule(repeated, tasks)) == best * n) return best * n;
    }
    return std::nullopt;
}

std::optional<std::int64_t> certified_optimum(std::span<const Task> tasks) {
    if (tasks.size() <= kExhaustiveOracleLimit && !tasks.empty()) return exhaustive_schedule_oracle(tasks).max_profit;
    return repeated_task_certificate(tasks);
}

}  // namespace gab
