#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gab/baselines.hpp"
#include "gab/ga_engine.hpp"
#include "gab/problems.hpp"
#include "gab/strategy_kind.hpp"

namespace gab::cli {

enum class ProblemKind { kFlipFlop, kJobSched };
enum class Algorithm { kGA, kGAB, kSA, kOracle };

std::string to_string(ProblemKind p);
std::string to_string(Algorithm a);
ProblemKind parse_problem(std::string_view text);
Algorithm parse_algorithm(std::string_view text);

/// Raised when an artifact cannot be written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One experiment as read from flags or a JSON config file. Unset optionals
/// fall back to the published recipe for (problem, size), then to the
/// SolverConfig defaults.
struct ExperimentSpec {
    ProblemKind problem = ProblemKind::kFlipFlop;
    std::size_t size = 7;
    Algorithm algorithm = Algorithm::kGA;
    std::optional<StrategyKind> strategy;  // gab defaults to ffbt / b

    std::optional<std::size_t> population_size;
    std::optional<double> mutation_rate;
    std::optional<std::size_t> elite_count;
    std::size_t max_iterations = 2048;
    std::size_t max_attempts = 500;
    std::optional<MutationMode> mutation_mode;
    FevalAccounting accounting = FevalAccounting::kPerGeneration;
    std::optional<SAConfig> annealing;

    std::size_t runs = 10;
    std::uint64_t seed = 0;

    // Job scheduling inputs: an explicit task file wins over the seeded set.
    std::optional<std::filesystem::path> tasks_file;
    std::optional<std::uint64_t> task_seed;
    std::uint64_t oracle_budget = 1'000'000;  // sampled oracle, size > 6

    // Tuning grids; empty means the published grid for the size.
    std::vector<std::size_t> population_grid;
    std::vector<double> mutation_grid;

    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> summary;

    /// Throws ConfigError on an inconsistent spec.
    void validate() const;
};

/// Keys mirror the field names; missing keys keep their defaults.
ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentSpec& spec);

/// Strategy after defaults: kNone for ga, ffbt/b for gab.
StrategyKind resolve_strategy(const ExperimentSpec& spec);
SolverConfig resolve_solver(const ExperimentSpec& spec);
TaskSet resolve_tasks(const ExperimentSpec& spec);

struct TableOptions {
    std::size_t runs = 10;
    std::uint64_t seed = 0;
    bool slow = false;
    std::optional<std::filesystem::path> output;
};

/// Writes `content` next to `path` and renames it into place, so a failed
/// command never leaves a partial file behind. Throws OutputError.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

// Each command returns a process exit code: 0 on success, 1 when an output
// could not be written, 2 on an invalid spec. Diagnostics go to `err`.
int cmd_run(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
int cmd_tune(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
int cmd_table(const std::string& recipe, const TableOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);
/// Writes the task set (and, with `sequence`, its schedule) as JSON.
int cmd_export(const ExperimentSpec& spec, const std::optional<TaskSequence>& sequence, std::ostream& out,
               std::ostream& err);

}  // namespace gab::cli
