#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "gab/baselines.hpp"
#include "gab/experiments.hpp"
#include "gab/ga_engine.hpp"
#include "gab/problems.hpp"

namespace gab {

// JSON. Task sets are arrays of {id, duration, deadline, profit}.
nlohmann::json to_json(std::span<const Task> tasks);
TaskSet tasks_from_json(const nlohmann::json& j);

/// {"entries": [{"kind": "work", "task", "start", "end"} | {"kind": "break", ...}],
///  "rejected": [...], "total_profit": n}
nlohmann::json to_json(const Schedule& s);
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolverConfig& cfg);
/// Missing keys keep their defaults; unknown enum spellings throw InvalidInput.
SolverConfig solver_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SAConfig& cfg);
SAConfig sa_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TaskGeneratorConfig& cfg);
TaskGeneratorConfig generator_config_from_json(const nlohmann::json& j);

/// {"max_profit", "witness", "enumerated"}
nlohmann::json to_json(const OracleResult& r);

// CSV. Real values are printed in their shortest round-trip form, so equal
// doubles always render to equal text.
inline constexpr const char* kTraceCsvHeader = "iteration,fitness,fevals,time_s";
inline constexpr const char* kBatchCsvHeader =
    "iteration,mean_fitness,std_fitness,mean_fevals,std_fevals,mean_time,std_time";
inline constexpr const char* kGridCsvHeader =
    "algorithm,size,pop_size,mutation_rate,best_fitness,fevals,iterations,time_s,winner";

void write_trace_csv(std::ostream& out, std::span<const TraceRecord> records);
void write_batch_csv(std::ostream& out, const BatchStats& stats);
void write_grid_csv(std::ostream& out, const GridResult& grid, const std::string& algorithm, std::size_t size);

std::string format_real(double v);

}  // namespace gab
