#include "gab/io.hpp"

#include <charconv>
#include <ostream>

namespace gab {

using nlohmann::json;

namespace {

template <class T>
void read_if(const json& j, const char* key, T& field) {
    if (j.contains(key)) field = j.at(key).get<T>();
}

}  // namespace

json to_json(std::span<const Task> tasks) {
    json arr = json::array();
    for (const Task& t : tasks)
        arr.push_back({{"id", t.id}, {"duration", t.duration}, {"deadline", t.deadline}, {"profit", t.profit}});
    return arr;
}

TaskSet tasks_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("task set JSON must be an array");
    TaskSet tasks;
    tasks.reserve(j.size());
    for (const auto& item : j) {
        Task t;
        t.id = item.at("id").get<std::uint32_t>();
        t.duration = item.at("duration").get<std::int64_t>();
        t.deadline = item.at("deadline").get<std::int64_t>();
        t.profit = item.at("profit").get<std::int64_t>();
        tasks.push_back(t);
    }
    validate_tasks(tasks);
    return tasks;
}

json to_json(const Schedule& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        if (e.is_work())
            entries.push_back({{"kind", "work"}, {"task", e.task}, {"start", e.start}, {"end", e.end}});
        else
            entries.push_back({{"kind", "break"}, {"start", e.start}, {"end", e.end}});
    }
    return {{"entries", entries}, {"rejected", s.rejected}, {"total_profit", s.total_profit}};
}

Schedule schedule_from_json(const json& j) {
    Schedule s;
    for (const auto& item : j.at("entries")) {
        ScheduleEntry e;
        const auto kind = item.at("kind").get<std::string>();
        if (kind == "work") {
            e.kind = ScheduleEntry::Kind::kWork;
            e.task = item.at("task").get<std::uint32_t>();
        } else if (kind == "break") {
            e.kind = ScheduleEntry::Kind::kBreak;
        } else {
            throw InvalidInput("unknown schedule entry kind '" + kind + "'");
        }
        e.start = item.at("start").get<std::int64_t>();
        e.end = item.at("end").get<std::int64_t>();
        s.entries.push_back(e);
    }
    s.rejected = j.at("rejected").get<std::vector<std::uint32_t>>();
    s.total_profit = j.at("total_profit").get<std::int64_t>();
    return s;
}

json to_json(const SolverConfig& cfg) {
    return {{"population_size", cfg.population_size},
            {"mutation_rate", cfg.mutation_rate},
            {"max_iterations", cfg.max_iterations},
            {"max_attempts", cfg.max_attempts},
            {"strategy", to_string(cfg.strategy)},
            {"seed", cfg.seed},
            {"mutation_mode", to_string(cfg.mutation_mode)},
            {"fevals_accounting", to_string(cfg.accounting)},
            {"stop_at_known_optimum", cfg.stop_at_known_optimum},
            {"elite_count", cfg.elite_count}};
}

SolverConfig solver_config_from_json(const json& j) {
    SolverConfig cfg;
    read_if(j, "population_size", cfg.population_size);
    read_if(j, "mutation_rate", cfg.mutation_rate);
    read_if(j, "max_iterations", cfg.max_iterations);
    read_if(j, "max_attempts", cfg.max_attempts);
    read_if(j, "seed", cfg.seed);
    read_if(j, "stop_at_known_optimum", cfg.stop_at_known_optimum);
    read_if(j, "elite_count", cfg.elite_count);
    if (j.contains("strategy")) cfg.strategy = parse_strategy(j.at("strategy").get<std::string>());
    if (j.contains("mutation_mode")) cfg.mutation_mode = parse_mutation_mode(j.at("mutation_mode").get<std::string>());
    if (j.contains("fevals_accounting"))
        cfg.accounting = parse_accounting(j.at("fevals_accounting").get<std::string>());
    return cfg;
}

json to_json(const SAConfig& cfg) {
    return {{"initial_temperature", cfg.initial_temperature},
            {"decay", cfg.decay},
            {"min_temperature", cfg.min_temperature},
            {"max_iterations", cfg.max_iterations},
            {"max_attempts", cfg.max_attempts},
            {"seed", cfg.seed},
            {"stop_at_known_optimum", cfg.stop_at_known_optimum}};
}

SAConfig sa_config_from_json(const json& j) {
    SAConfig cfg;
    read_if(j, "initial_temperature", cfg.initial_temperature);
    read_if(j, "decay", cfg.decay);
    read_if(j, "min_temperature", cfg.min_temperature);
    read_if(j, "max_iterations", cfg.max_iterations);
    read_if(j, "max_attempts", cfg.max_attempts);
    read_if(j, "seed", cfg.seed);
    read_if(j, "stop_at_known_optimum", cfg.stop_at_known_optimum);
    return cfg;
}

json to_json(const TaskGeneratorConfig& cfg) {
    return {{"duration_min", cfg.duration_min}, {"duration_max", cfg.duration_max},
            {"deadline_factor", cfg.deadline_factor}, {"profit_min", cfg.profit_min},
            {"profit_max", cfg.profit_max}};
}

TaskGeneratorConfig generator_config_from_json(const json& j) {
    TaskGeneratorConfig cfg;
    read_if(j, "duration_min", cfg.duration_min);
    read_if(j, "duration_max", cfg.duration_max);
    read_if(j, "deadline_factor", cfg.deadline_factor);
    read_if(j, "profit_min", cfg.profit_min);
    read_if(j, "profit_max", cfg.profit_max);
    return cfg;
}

json to_json(const OracleResult& r) {
    return {{"max_profit", r.max_profit}, {"witness", r.witness.genes}, {"enumerated", r.enumerated}};
}

std::string format_real(double v) {
    // Shortest text that parses back to the same double.
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& out, std::span<const TraceRecord> records) {
    out << kTraceCsvHeader << '\n';
    for (const auto& r : records)
        out << r.iteration << ',' << format_real(r.fitness) << ',' << r.fevals << ',' << format_real(r.time_s)
            << '\n';
}

void write_batch_csv(std::ostream& out, const BatchStats& s) {
    out << kBatchCsvHeader << '\n';
    for (std::size_t i = 0; i < s.length(); ++i) {
        out << i << ',' << format_real(s.mean_fitness[i]) << ',' << format_real(s.std_fitness[i]) << ','
            << format_real(s.mean_fevals[i]) << ',' << format_real(s.std_fevals[i]) << ','
            << format_real(s.mean_time[i]) << ',' << format_real(s.std_time[i]) << '\n';
    }
}

void write_grid_csv(std::ostream& out, const GridResult& grid, const std::string& algorithm, std::size_t size) {
    out << kGridCsvHeader << '\n';
    const auto is_winner = [&](const GridRow& r) {
        for (const auto& w : grid.winners)
            if (w.population_size == r.population_size && w.mutation_rate == r.mutation_rate) return true;
        return false;
    };
    for (const auto& r : grid.rows) {
        out << algorithm << ',' << size << ',' << r.population_size << ',' << format_real(r.mutation_rate) << ','
            << format_real(r.best_fitness) << ',' << r.fevals << ',' << r.iterations << ','
            << format_real(r.time_s) << ',' << (is_winner(r) ? 1 : 0) << '\n';
    }
}

}  // namespace gab
