#include "gab/problems.hpp"

#include <algorithm>
#include <sstream>

namespace gab {

BitString BitString::from_string(std::string_view text) {
    BitString s;
    s.bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw InvalidInput("bit string may only contain '0' and '1'");
        s.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return s;
}

std::string BitString::to_string() const {
    std::string out(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? '1' : '0';
    return out;
}

std::size_t flip_flop_fitness(const BitString& s) {
    if (s.size() < 2) throw InvalidInput("flip-flop fitness needs at least two bits");
    std::size_t alternations = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) alternations += s.bits[i] != s.bits[i + 1];
    return alternations;
}

BitString complement(const BitString& s) {
    BitString out = s;
    for (auto& b : out.bits) b ^= 1U;
    return out;
}

void validate_tasks(std::span<const Task> tasks) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        if (t.id != i) throw InvalidInput("task ids must be contiguous from 0");
        if (t.duration < 1 || t.deadline < 1 || t.profit < 0)
            throw InvalidInput("task " + std::to_string(i) + " has an out-of-range field");
    }
}

TaskSequence identity_sequence(std::size_t n) {
    TaskSequence seq;
    seq.genes.resize(n);
    for (std::size_t i = 0; i < n; ++i) seq.genes[i] = static_cast<std::uint32_t>(i);
    return seq;
}

Schedule build_schedule(const TaskSequence& seq, std::span<const Task> tasks) {
    Schedule s;
    s.entries.reserve(seq.size() * 2);
    std::int64_t clock = 0;
    std::int64_t worked_since_break = 0;

    auto take_break = [&] {
        s.entries.push_back({ScheduleEntry::Kind::kBreak, 0, clock, clock + 1});
        clock += 1;
        worked_since_break = 0;
    };

    for (std::uint32_t gene : seq.genes) {
        if (gene >= tasks.size()) throw InvalidInput("gene index out of range");
        const Task& t = tasks[gene];
        if (clock + t.duration > t.deadline) {
            s.rejected.push_back(gene);
            continue;
        }
        s.entries.push_back({ScheduleEntry::Kind::kWork, gene, clock, clock + t.duration});
        clock += t.duration;
        s.total_profit += t.profit;
        if (t.duration > kWorkUnitsPerBreak) {
            take_break();
        } else {
            worked_since_break += t.duration;
            if (worked_since_break >= kWorkUnitsPerBreak) take_break();
        }
    }
    return s;
}

TaskSequence flatten(const Schedule& s) {
    TaskSequence seq;
    seq.genes.reserve(s.entries.size() + s.rejected.size());
    for (const auto& e : s.entries)
        if (e.is_work()) seq.genes.push_back(e.task);
    seq.genes.insert(seq.genes.end(), s.rejected.begin(), s.rejected.end());
    return seq;
}

TaskSet generate_tasks(std::size_t n, std::uint64_t seed, const TaskGeneratorConfig& cfg) {
    if (n == 0) throw InvalidInput("task set size must be positive");
    if (cfg.duration_min < 1 || cfg.duration_max < cfg.duration_min || cfg.deadline_factor < 1 ||
        cfg.profit_min < 0 || cfg.profit_max < cfg.profit_min)
        throw InvalidInput("invalid task generator ranges");

    Rng rng(seed);
    const auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng.uniform_int(0, static_cast<std::uint64_t>(hi - lo)));
    };
    const auto horizon = cfg.deadline_factor * static_cast<std::int64_t>(n);

    TaskSet tasks(n);
    for (std::size_t i = 0; i < n; ++i) {
        Task& t = tasks[i];
        t.id = static_cast<std::uint32_t>(i);
        t.duration = draw(cfg.duration_min, cfg.duration_max);
        t.deadline = draw(t.duration, std::max(t.duration, horizon));
        t.profit = draw(cfg.profit_min, cfg.profit_max);
    }
    return tasks;
}

std::string check_schedule(const Schedule& s, const TaskSequence& source, std::span<const Task> tasks) {
    std::ostringstream err;
    std::int64_t clock = 0;
    std::int64_t profit = 0;
    std::vector<std::uint32_t> used;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const auto& e = s.entries[i];
        if (e.start != clock) {
            err << "entry " << i << " starts at " << e.start << ", expected " << clock;
            return err.str();
        }
        if (e.end <= e.start) {
            err << "entry " << i << " has non-positive length";
            return err.str();
        }
        if (e.is_break() && e.end - e.start != 1) {
            err << "break at entry " << i << " is not one unit long";
            return err.str();
        }
        if (e.is_work()) {
            if (e.task >= tasks.size()) {
                err << "entry " << i << " refers to unknown task " << e.task;
                return err.str();
            }
            const Task& t = tasks[e.task];
            if (e.end - e.start != t.duration) {
                err << "entry " << i << " length differs from task duration";
                return err.str();
            }
            if (e.end > t.deadline) {
                err << "task " << e.task << " finishes at " << e.end << " after deadline " << t.deadline;
                return err.str();
            }
            profit += t.profit;
            used.push_back(e.task);
        }
        clock = e.end;
    }
    if (profit != s.total_profit) {
        err << "total_profit " << s.total_profit << " differs from accepted profit " << profit;
        return err.str();
    }
    used.insert(used.end(), s.rejected.begin(), s.rejected.end());
    std::vector<std::uint32_t> expected = source.genes;
    std::sort(used.begin(), used.end());
    std::sort(expected.begin(), expected.end());
    if (used != expected) return "accepted and rejected tasks do not match the source multiset";
    return {};
}

FlipFlopProblem::FlipFlopProblem(std::size_t length) : length_(length) {
    if (length < 2) throw InvalidInput("flip-flop problems need at least two bits");
}

BitString FlipFlopProblem::random_individual(Rng& rng) const {
    BitString s;
    s.bits.resize(length_);
    for (auto& b : s.bits) b = static_cast<std::uint8_t>(rng() >> 63);
    return s;
}

void FlipFlopProblem::mutate_gene(BitString& s, std::size_t index, Rng&) const { s.bits[index] ^= 1U; }

JobSchedulingProblem::JobSchedulingProblem(TaskSet tasks, std::optional<double> certified_optimum)
    : tasks_(std::move(tasks)), certified_optimum_(certified_optimum) {
    if (tasks_.empty()) throw InvalidInput("job scheduling needs at least one task");
    validate_tasks(tasks_);
}

TaskSequence JobSchedulingProblem::random_individual(Rng& rng) const {
    TaskSequence s;
    s.genes.resize(tasks_.size());
    for (auto& g : s.genes) g = static_cast<std::uint32_t>(rng.uniform_int(0, tasks_.size() - 1));
    return s;
}

void JobSchedulingProblem::mutate_gene(TaskSequence& s, std::size_t index, Rng& rng) const {
    s.genes[index] = static_cast<std::uint32_t>(rng.uniform_int(0, tasks_.size() - 1));
}

}  // namespace gab
