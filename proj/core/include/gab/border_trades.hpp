#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gab/ga_engine.hpp"
#include "gab/problems.hpp"
#include "gab/strategy_kind.hpp"

namespace gab {

// ---------------------------------------------------------------------------
// Flip-Flop

/// Complements the second parent when both parents start with the same bit.
std::pair<BitString, BitString> flipflop_trade(const BitString& p1, const BitString& p2);

// ---------------------------------------------------------------------------
// Value-based trades (A1, A2)

/// A1: profit * deadline / duration. A2: profit.
double task_value(const Task& t, StrategyKind kind);

/// High/low split of a task set around the mean task value. A value equal to
/// the mean counts as high.
struct ValueGrouping {
    std::vector<double> values;
    double mean = 0.0;
    std::vector<std::uint8_t> high;

    bool is_high(std::uint32_t task) const { return high.at(task) != 0; }
    bool same_group(std::uint32_t a, std::uint32_t b) const { return is_high(a) == is_high(b); }
};

ValueGrouping group_by_value(std::span<const Task> tasks, StrategyKind kind);

/// Swaps genes (0,1), (2,3), ... when the child's first task falls in the same
/// value group as `reference_first`; otherwise returns the child unchanged.
TaskSequence a_trade(const TaskSequence& child, const ValueGrouping& grouping, std::uint32_t reference_first);

// ---------------------------------------------------------------------------
// Schedule-based trades (B, C1, C2)

/// Swaps the work entries on either side of break `break_ordinal` (0-based,
/// in timeline order). Returns false and leaves the schedule untouched when the
/// break has no work entry on one side.
bool swap_around_break(Schedule& s, std::size_t break_ordinal);

std::size_t count_breaks(const Schedule& s);

/// Unconditional trade: swaps the work neighbours of every break, latest break
/// first, without scoring the result, then flattens back to a sequence.
/// Charges one schedule build.
TaskSequence b_trade(const TaskSequence& seq, std::span<const Task> tasks, TradeCost* cost = nullptr);

/// Keeps the b_trade candidate when its profit is at least the original's.
/// Charges one build and two fitness evaluations.
TaskSequence c1_trade(const TaskSequence& seq, std::span<const Task> tasks, TradeCost* cost = nullptr);

/// Probes the breaks earliest first. Each probe swaps one break's neighbours,
/// rebuilds and scores; a losing swap is reverted and the next break tried,
/// the first swap that does not lose profit is kept and ends the trade.
/// Charges one build plus one fitness evaluation per probe.
TaskSequence c2_trade(const TaskSequence& seq, std::span<const Task> tasks, TradeCost* cost = nullptr);

// ---------------------------------------------------------------------------
// Engine wiring

/// Throws ConfigError when the strategy does not apply to the problem type.
ReproductionHooks<BitString> make_hooks(const FlipFlopProblem& problem, StrategyKind kind);
ReproductionHooks<TaskSequence> make_hooks(const JobSchedulingProblem& problem, StrategyKind kind);

/// Runs the GA with the hooks for `cfg.strategy`, seeded from `cfg.seed`.
template <class P>
RunTrace<typename P::Chromosome> solve(const P& problem, const SolverConfig& cfg) {
    Rng rng(cfg.seed);
    return evolve(problem, cfg, make_hooks(problem, cfg.strategy), rng);
}

}  // namespace gab
