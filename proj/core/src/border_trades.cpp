#include "gab/border_trades.hpp"

#include <numeric>

namespace gab {

std::pair<BitString, BitString> flipflop_trade(const BitString& p1, const BitString& p2) {
    if (p1.size() != p2.size()) throw InvalidInput("flip-flop trade parents differ in length");
    if (!p1.bits.empty() && p1.bits.front() == p2.bits.front()) return {p1, complement(p2)};
    return {p1, p2};
}

double task_value(const Task& t, StrategyKind kind) {
    switch (kind) {
        case StrategyKind::kA1:
            return static_cast<double>(t.profit) * static_cast<double>(t.deadline) / static_cast<double>(t.duration);
        case StrategyKind::kA2: return static_cast<double>(t.profit);
        default: throw InvalidInput("task values are defined for A1 and A2 only");
    }
}

ValueGrouping group_by_value(std::span<const Task> tasks, StrategyKind kind) {
    if (tasks.empty()) throw InvalidInput("cannot group an empty task set");
    ValueGrouping g;
    g.values.reserve(tasks.size());
    for (const Task& t : tasks) g.values.push_back(task_value(t, kind));
    g.mean = std::accumulate(g.values.begin(), g.values.end(), 0.0) / static_cast<double>(g.values.size());
    g.high.reserve(tasks.size());
    for (double v : g.values) g.high.push_back(v >= g.mean ? 1 : 0);
    return g;
}

TaskSequence a_trade(const TaskSequence& child, const ValueGrouping& grouping, std::uint32_t reference_first) {
    if (child.genes.empty() || !grouping.same_group(child.genes.front(), reference_first)) return child;
    TaskSequence out = child;
    for (std::size_t i = 0; i + 1 < out.genes.size(); i += 2) std::swap(out.genes[i], out.genes[i + 1]);
    return out;
}

std::size_t count_breaks(const Schedule& s) {
    std::size_t n = 0;
    for (const auto& e : s.entries) n += e.is_break();
    return n;
}

bool swap_around_break(Schedule& s, std::size_t break_ordinal) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (!s.entries[i].is_break()) continue;
        if (seen++ != break_ordinal) continue;
        if (i == 0 || i + 1 >= s.entries.size()) return false;
        auto& before = s.entries[i - 1];
        auto& after = s.entries[i + 1];
        if (!before.is_work() || !after.is_work()) return false;
        std::swap(before.task, after.task);
        return true;
    }
    return false;
}

TaskSequence b_trade(const TaskSequence& seq, std::span<const Task> tasks, TradeCost* cost) {
    Schedule s = build_schedule(seq, tasks);
    if (cost) ++cost->schedule_builds;
    for (std::size_t b = count_breaks(s); b-- > 0;) swap_around_break(s, b);
    return flatten(s);
}

TaskSequence c1_trade(const TaskSequence& seq, std::span<const Task> tasks, TradeCost* cost) {
    TaskSequence candidate = b_trade(seq, tasks, cost);
    const auto original_profit = schedule_fitness(build_schedule(seq, tasks));
    const auto candidate_profit = schedule_fitness(build_schedule(candidate, tasks));
    if (cost) cost->fitness_evals += 2;
    return candidate_profit >= original_profit ? candidate : seq;
}

TaskSequence c2_trade(const TaskSequence& seq, std::span<const Task> tasks, TradeCost* cost) {
    Schedule working = build_schedule(seq, tasks);
    if (cost) ++cost->schedule_builds;
    // One trade at most: probe breaks in order, stop at the first one that
    // does not lose profit.
    for (std::size_t b = 0; b < count_breaks(working); ++b) {
        Schedule probe = working;
        if (!swap_around_break(probe, b)) continue;
        Schedule rebuilt = build_schedule(flatten(probe), tasks);
        if (cost) ++cost->fitness_evals;
        if (schedule_fitness(rebuilt) >= schedule_fitness(working)) return flatten(rebuilt);
    }
    return flatten(working);
}

ReproductionHooks<BitString> make_hooks(const FlipFlopProblem&, StrategyKind kind) {
    if (!applies_to_bit_strings(kind))
        throw ConfigError("strategy " + to_string(kind) + " does not apply to flip-flop problems");
    ReproductionHooks<BitString> hooks;
    if (kind == StrategyKind::kFlipFlopTrade) {
        hooks.before_crossover = [](BitString& p1, BitString& p2, TradeCost&) {
            auto traded = flipflop_trade(p1, p2);
            p2 = std::move(traded.second);
        };
    }
    return hooks;
}

ReproductionHooks<TaskSequence> make_hooks(const JobSchedulingProblem& problem, StrategyKind kind) {
    if (!applies_to_task_sequences(kind))
        throw ConfigError("strategy " + to_string(kind) + " does not apply to job scheduling problems");
    ReproductionHooks<TaskSequence> hooks;
    const TaskSet* tasks = &problem.tasks();
    switch (kind) {
        case StrategyKind::kA1:
        case StrategyKind::kA2:
            hooks.after_mutation = [grouping = group_by_value(*tasks, kind)](
                                       TaskSequence& child, const TaskSequence& reference, TradeCost&) {
                child = a_trade(child, grouping, reference.genes.front());
            };
            break;
        case StrategyKind::kB:
            hooks.after_mutation = [tasks](TaskSequence& child, const TaskSequence&, TradeCost& cost) {
                child = b_trade(child, *tasks, &cost);
            };
            break;
        case StrategyKind::kC1:
            hooks.after_mutation = [tasks](TaskSequence& child, const TaskSequence&, TradeCost& cost) {
                child = c1_trade(child, *tasks, &cost);
            };
            break;
        case StrategyKind::kC2:
            hooks.after_mutation = [tasks](TaskSequence& child, const TaskSequence&, TradeCost& cost) {
                child = c2_trade(child, *tasks, &cost);
            };
            break;
        default: break;
    }
    return hooks;
}

}  // namespace gab
