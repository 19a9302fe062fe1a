#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gab/rng.hpp"

namespace gab {

/// Raised when an operation receives arguments outside its domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Flip-Flop

/// Fixed-length binary chromosome. Each element is 0 or 1.
struct BitString {
    std::vector<std::uint8_t> bits;

    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    /// Parses a string of '0'/'1' characters.
    static BitString from_string(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return bits.size(); }
    bool operator==(const BitString&) const = default;
};

/// Number of adjacent positions whose bits differ. Throws for length < 2.
std::size_t flip_flop_fitness(const BitString& s);

BitString complement(const BitString& s);

// ---------------------------------------------------------------------------
// Job scheduling with breaks

struct Task {
    std::uint32_t id = 0;
    std::int64_t duration = 1;
    std::int64_t deadline = 1;
    std::int64_t profit = 0;

    bool operator==(const Task&) const = default;
};

using TaskSet = std::vector<Task>;

/// Throws InvalidInput unless ids are 0..n-1 in order and every field is in range.
void validate_tasks(std::span<const Task> tasks);

/// Chromosome over a task set: one task index per gene, repetition allowed.
struct TaskSequence {
    std::vector<std::uint32_t> genes;

    std::size_t size() const { return genes.size(); }
    bool operator==(const TaskSequence&) const = default;
};

/// The identity order 0, 1, ..., n-1.
TaskSequence identity_sequence(std::size_t n);

struct ScheduleEntry {
    enum class Kind : std::uint8_t { kWork, kBreak };

    Kind kind = Kind::kWork;
    std::uint32_t task = 0;  // meaningful for kWork only
    std::int64_t start = 0;
    std::int64_t end = 0;

    bool is_work() const { return kind == Kind::kWork; }
    bool is_break() const { return kind == Kind::kBreak; }
    bool operator==(const ScheduleEntry&) const = default;
};

/// Timed phenotype of a TaskSequence: a gap-free work/break timeline from time 0
/// followed by the tail of tasks that could not meet their deadline.
struct Schedule {
    std::vector<ScheduleEntry> entries;
    std::vector<std::uint32_t> rejected;
    std::int64_t total_profit = 0;

    bool operator==(const Schedule&) const = default;
};

/// Units of consecutive work after which a one-unit break is mandated.
inline constexpr std::int64_t kWorkUnitsPerBreak = 2;

/// Walks the sequence in order. A task is accepted when it can finish by its
/// deadline from the current clock; otherwise it goes to the rejected tail and
/// consumes no time. A task longer than two units is followed by a break right
/// away; shorter tasks accumulate until two units of work have been done.
Schedule build_schedule(const TaskSequence& seq, std::span<const Task> tasks);

inline std::int64_t schedule_fitness(const Schedule& s) { return s.total_profit; }

/// Accepted work in timeline order followed by the rejected tail.
TaskSequence flatten(const Schedule& s);

/// Distribution knobs for random task sets. Deadlines are drawn from
/// [duration, deadline_factor * n].
struct TaskGeneratorConfig {
    std::int64_t duration_min = 1;
    std::int64_t duration_max = 5;
    std::int64_t deadline_factor = 4;
    std::int64_t profit_min = 1;
    std::int64_t profit_max = 20;

    bool operator==(const TaskGeneratorConfig&) const = default;
};

TaskSet generate_tasks(std::size_t n, std::uint64_t seed, const TaskGeneratorConfig& cfg = {});

/// Checks every Schedule invariant against its source sequence. Returns an empty
/// string when valid, else a description of the first violation.
std::string check_schedule(const Schedule& s, const TaskSequence& source, std::span<const Task> tasks);

// ---------------------------------------------------------------------------
// Problem adapters consumed by the GA engine and the annealer.

class FlipFlopProblem {
public:
    using Chromosome = BitString;

    explicit FlipFlopProblem(std::size_t length);

    std::size_t length() const { return length_; }
    double fitness(const BitString& s) const { return static_cast<double>(flip_flop_fitness(s)); }
    BitString random_individual(Rng& rng) const;
    void mutate_gene(BitString& s, std::size_t index, Rng& rng) const;
    std::optional<double> known_optimum() const { return static_cast<double>(length_ - 1); }

private:
    std::size_t length_;
};

class JobSchedulingProblem {
public:
    using Chromosome = TaskSequence;

    /// `certified_optimum` is set only when an exhaustive oracle has proven it.
    explicit JobSchedulingProblem(TaskSet tasks, std::optional<double> certified_optimum = std::nullopt);

    std::size_t length() const { return tasks_.size(); }
    const TaskSet& tasks() const { return tasks_; }
    double fitness(const TaskSequence& s) const {
        return static_cast<double>(schedule_fitness(build_schedule(s, tasks_)));
    }
    TaskSequence random_individual(Rng& rng) const;
    void mutate_gene(TaskSequence& s, std::size_t index, Rng& rng) const;
    std::optional<double> known_optimum() const { return certified_optimum_; }

private:
    TaskSet tasks_;
    std::optional<double> certified_optimum_;
};

}  // namespace gab
