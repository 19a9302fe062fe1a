#include "gab/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <system_error>

#include "gab/border_trades.hpp"
#include "gab/experiments.hpp"
#include "gab/io.hpp"
#include "gab/presets.hpp"
#include "detail.hpp"

namespace gab::cli {

using nlohmann::json;

namespace {

std::string lower(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

template <class T>
void read_if(const json& j, const char* key, T& field) {
    if (j.contains(key)) field = j.at(key).get<T>();
}

template <class T>
void read_if(const json& j, const char* key, std::optional<T>& field) {
    if (j.contains(key)) field = j.at(key).get<T>();
}

std::string optional_index(const std::optional<std::size_t>& i) { return i ? std::to_string(*i) : "N/A"; }

}  // namespace

std::string to_string(ProblemKind p) { return p == ProblemKind::kFlipFlop ? "flipflop" : "jobsched"; }

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kGA: return "ga";
        case Algorithm::kGAB: return "gab";
        case Algorithm::kSA: return "sa";
        case Algorithm::kOracle: return "oracle";
    }
    return "ga";
}

ProblemKind parse_problem(std::string_view text) {
    const auto s = lower(text);
    if (s == "flipflop" || s == "flip-flop") return ProblemKind::kFlipFlop;
    if (s == "jobsched" || s == "job-scheduling") return ProblemKind::kJobSched;
    throw ConfigError("unknown problem '" + std::string(text) + "' (expected flipflop or jobsched)");
}

Algorithm parse_algorithm(std::string_view text) {
    const auto s = lower(text);
    if (s == "ga") return Algorithm::kGA;
    if (s == "gab") return Algorithm::kGAB;
    if (s == "sa") return Algorithm::kSA;
    if (s == "oracle") return Algorithm::kOracle;
    throw ConfigError("unknown algorithm '" + std::string(text) + "' (expected ga, gab, sa or oracle)");
}

void ExperimentSpec::validate() const {
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (!tasks_file && size < 1) throw ConfigError("size must be positive");
    if (problem == ProblemKind::kFlipFlop && size < 2) throw ConfigError("flip-flop size must be at least 2");
    if (problem == ProblemKind::kFlipFlop && tasks_file) throw ConfigError("a task file only applies to jobsched");
    if (oracle_budget < 1) throw ConfigError("oracle budget must be positive");
    if (population_size && *population_size < 2) throw ConfigError("population size must be at least 2");
    if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0))
        throw ConfigError("mutation rate must lie in [0, 1]");
    if (max_iterations < 1 || max_attempts < 1) throw ConfigError("iteration and attempt limits must be positive");

    switch (algorithm) {
        case Algorithm::kGA:
            if (strategy && *strategy != StrategyKind::kNone)
                throw ConfigError("algorithm ga takes no border-trade strategy (use gab)");
            break;
        case Algorithm::kGAB:
            if (strategy && *strategy == StrategyKind::kNone)
                throw ConfigError("algorithm gab needs a border-trade strategy");
            break;
        case Algorithm::kSA:
            if (strategy && *strategy != StrategyKind::kNone) throw ConfigError("sa takes no border-trade strategy");
            break;
        case Algorithm::kOracle:
            if (problem != ProblemKind::kJobSched) throw ConfigError("the oracle only applies to jobsched");
            break;
    }
    const StrategyKind s = resolve_strategy(*this);
    if (problem == ProblemKind::kFlipFlop && !applies_to_bit_strings(s))
        throw ConfigError("strategy " + gab::to_string(s) + " does not apply to flip-flop problems");
    if (problem == ProblemKind::kJobSched && !applies_to_task_sequences(s))
        throw ConfigError("strategy " + gab::to_string(s) + " does not apply to job scheduling problems");
    for (std::size_t p : population_grid)
        if (p < 2) throw ConfigError("population grid entries must be at least 2");
    for (double r : mutation_grid)
        if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("mutation grid entries must lie in [0, 1]");
}

ExperimentSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
    static const std::set<std::string> known = {
        "problem",       "size",          "algorithm",        "strategy",        "population_size",
        "mutation_rate", "elite_count",   "max_iterations",   "max_attempts",    "mutation_mode",
        "fevals_accounting", "annealing", "runs",             "seed",            "tasks_file",
        "task_seed",     "oracle_budget", "population_grid",  "mutation_grid",   "output",
        "summary"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");

    ExperimentSpec s;
    if (j.contains("problem")) s.problem = parse_problem(j.at("problem").get<std::string>());
    if (j.contains("algorithm")) s.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    if (j.contains("strategy")) s.strategy = parse_strategy(j.at("strategy").get<std::string>());
    if (j.contains("mutation_mode")) s.mutation_mode = parse_mutation_mode(j.at("mutation_mode").get<std::string>());
    if (j.contains("fevals_accounting"))
        s.accounting = parse_accounting(j.at("fevals_accounting").get<std::string>());
    if (j.contains("annealing")) s.annealing = sa_config_from_json(j.at("annealing"));
    read_if(j, "size", s.size);
    read_if(j, "population_size", s.population_size);
    read_if(j, "mutation_rate", s.mutation_rate);
    read_if(j, "elite_count", s.elite_count);
    read_if(j, "max_iterations", s.max_iterations);
    read_if(j, "max_attempts", s.max_attempts);
    read_if(j, "runs", s.runs);
    read_if(j, "seed", s.seed);
    read_if(j, "task_seed", s.task_seed);
    read_if(j, "oracle_budget", s.oracle_budget);
    read_if(j, "population_grid", s.population_grid);
    read_if(j, "mutation_grid", s.mutation_grid);
    if (j.contains("tasks_file")) s.tasks_file = j.at("tasks_file").get<std::string>();
    if (j.contains("output")) s.output = j.at("output").get<std::string>();
    if (j.contains("summary")) s.summary = j.at("summary").get<std::string>();
    return s;
}

json to_json(const ExperimentSpec& s) {
    json j = {{"problem", to_string(s.problem)},
              {"size", s.size},
              {"algorithm", to_string(s.algorithm)},
              {"max_iterations", s.max_iterations},
              {"max_attempts", s.max_attempts},
              {"fevals_accounting", gab::to_string(s.accounting)},
              {"runs", s.runs},
              {"seed", s.seed},
              {"oracle_budget", s.oracle_budget},
              {"population_grid", s.population_grid},
              {"mutation_grid", s.mutation_grid}};
    if (s.strategy) j["strategy"] = gab::to_string(*s.strategy);
    if (s.population_size) j["population_size"] = *s.population_size;
    if (s.mutation_rate) j["mutation_rate"] = *s.mutation_rate;
    if (s.elite_count) j["elite_count"] = *s.elite_count;
    if (s.mutation_mode) j["mutation_mode"] = gab::to_string(*s.mutation_mode);
    if (s.annealing) j["annealing"] = gab::to_json(*s.annealing);
    if (s.task_seed) j["task_seed"] = *s.task_seed;
    if (s.tasks_file) j["tasks_file"] = s.tasks_file->string();
    if (s.output) j["output"] = s.output->string();
    if (s.summary) j["summary"] = s.summary->string();
    return j;
}

StrategyKind resolve_strategy(const ExperimentSpec& spec) {
    if (spec.strategy) return *spec.strategy;
    if (spec.algorithm != Algorithm::kGAB) return StrategyKind::kNone;
    return spec.problem == ProblemKind::kFlipFlop ? StrategyKind::kFlipFlopTrade : StrategyKind::kB;
}

SolverConfig resolve_solver(const ExperimentSpec& spec) {
    const StrategyKind strategy = resolve_strategy(spec);
    const auto hp = spec.problem == ProblemKind::kFlipFlop ? presets::flipflop(spec.size, strategy)
                                                           : presets::jobsched(spec.size, strategy);
    SolverConfig cfg = presets::solver_config(hp.value_or(presets::Hyperparameters{10, 0.1, 1}), strategy);
    if (spec.population_size) {
        cfg.population_size = *spec.population_size;
        if (cfg.elite_count >= cfg.population_size) cfg.elite_count = 1;
    }
    if (spec.mutation_rate) cfg.mutation_rate = *spec.mutation_rate;
    if (spec.elite_count) cfg.elite_count = *spec.elite_count;
    if (spec.mutation_mode) cfg.mutation_mode = *spec.mutation_mode;
    cfg.max_iterations = spec.max_iterations;
    cfg.max_attempts = spec.max_attempts;
    cfg.accounting = spec.accounting;
    cfg.seed = spec.seed;
    cfg.validate();
    return cfg;
}

SAConfig resolve_annealing(const ExperimentSpec& spec) {
    SAConfig cfg = spec.annealing.value_or(presets::annealing());
    cfg.max_iterations = spec.max_iterations;
    cfg.max_attempts = spec.max_attempts;
    cfg.seed = spec.seed;
    cfg.validate();
    return cfg;
}

TaskSet resolve_tasks(const ExperimentSpec& spec) {
    if (spec.tasks_file) {
        std::ifstream in(*spec.tasks_file);
        if (!in) throw ConfigError("cannot read task file " + spec.tasks_file->string());
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ConfigError("task file " + spec.tasks_file->string() + " is not valid JSON: " + e.what());
        }
        return tasks_from_json(j.is_object() && j.contains("tasks") ? j.at("tasks") : j);
    }
    return generate_tasks(spec.size, spec.task_seed.value_or(presets::kTaskSeed), presets::task_generator());
}

JobSchedulingProblem resolve_jobsched(const ExperimentSpec& spec) {
    TaskSet tasks = resolve_tasks(spec);
    const auto optimum = certified_optimum(tasks);
    return JobSchedulingProblem(std::move(tasks),
                                optimum ? std::optional<double>(static_cast<double>(*optimum)) : std::nullopt);
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw OutputError("cannot open " + path.string() + " for writing");
        f << content;
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw OutputError("failed writing " + path.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw OutputError("cannot move output into place at " + path.string());
    }
}

double empirical_target(const BatchStats& stats) {
    return *std::max_element(stats.best_fitness.begin(), stats.best_fitness.end());
}

std::string label(const ExperimentSpec& spec) {
    switch (spec.algorithm) {
        case Algorithm::kSA: return "SA";
        case Algorithm::kOracle: return "Oracle";
        default: return display_name(resolve_strategy(spec));
    }
}

int cmd_run(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        spec.validate();
        if (spec.algorithm == Algorithm::kOracle) return cmd_oracle(spec, out, err);

        BatchStats stats;
        std::optional<double> target;
        std::size_t size = spec.size;
        if (spec.problem == ProblemKind::kFlipFlop) {
            const FlipFlopProblem problem(spec.size);
            target = problem.known_optimum();
            stats = spec.algorithm == Algorithm::kSA
                        ? run_sa_batch(problem, resolve_annealing(spec), spec.runs, spec.seed)
                        : run_batch(problem, resolve_solver(spec), spec.runs, spec.seed);
        } else {
            const JobSchedulingProblem problem = resolve_jobsched(spec);
            size = problem.length();
            target = problem.known_optimum();
            stats = spec.algorithm == Algorithm::kSA
                        ? run_sa_batch(problem, resolve_annealing(spec), spec.runs, spec.seed)
                        : run_batch(problem, resolve_solver(spec), spec.runs, spec.seed);
        }
        const bool certified = target.has_value();
        const ConvergenceSummary summary = summarize(stats, target.value_or(empirical_target(stats)));

        if (spec.output) {
            std::ostringstream csv;
            write_batch_csv(csv, stats);
            write_file_atomically(*spec.output, csv.str());
        }
        if (spec.summary) {
            json j = {{"algorithm", label(spec)},
                      {"problem", to_string(spec.problem)},
                      {"size", size},
                      {"runs", spec.runs},
                      {"seed", spec.seed},
                      {"target", summary.report.target},
                      {"target_certified", certified},
                      {"best_fitness", empirical_target(stats)},
                      {"max_mean_fitness", summary.max_mean_fitness},
                      {"converged_at", summary.report.converged_at ? json(*summary.report.converged_at) : json()},
                      {"semi_converged_at",
                       summary.report.semi_converged_at ? json(*summary.report.semi_converged_at) : json()},
                      {"termination_iterations", stats.termination_iterations},
                      {"total_fevals_mean", stats.mean_fevals.back()}};
            write_file_atomically(*spec.summary, j.dump(2) + "\n");
        }
        out << label(spec) << ' ' << to_string(spec.problem) << " size=" << size << " runs=" << spec.runs
            << " best=" << format_real(empirical_target(stats))
            << " target=" << format_real(summary.report.target) << (certified ? "" : " (best seen)")
            << " converged_at=" << optional_index(summary.report.converged_at)
            << " semi_converged_at=" << optional_index(summary.report.semi_converged_at)
            << " fevals=" << format_real(stats.mean_fevals.back())
            << " time_s=" << format_real(stats.mean_time.back()) << '\n';
        return kExitOk;
    });
}

int cmd_tune(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        spec.validate();
        if (spec.algorithm == Algorithm::kSA || spec.algorithm == Algorithm::kOracle)
            throw ConfigError("tuning applies to ga and gab only");
        auto pops = spec.population_grid;
        auto rates = spec.mutation_grid;
        if (pops.empty() || rates.empty()) {
            const auto grid = spec.problem == ProblemKind::kFlipFlop ? presets::flipflop_grid(spec.size)
                                                                     : presets::jobsched_grid(spec.size);
            if (!grid) throw ConfigError("no published grid for this size; pass --pops and --rates");
            if (pops.empty()) pops = grid->population_sizes;
            if (rates.empty()) rates = grid->mutation_rates;
        }
        SolverConfig base = resolve_solver(spec);
        const std::size_t min_pop = *std::min_element(pops.begin(), pops.end());
        if (!spec.elite_count && base.elite_count >= min_pop) base.elite_count = 1;

        GridResult grid;
        std::size_t size = spec.size;
        if (spec.problem == ProblemKind::kFlipFlop) {
            grid = grid_tune(FlipFlopProblem(spec.size), pops, rates, base, spec.seed);
        } else {
            const JobSchedulingProblem problem = resolve_jobsched(spec);
            size = problem.length();
            grid = grid_tune(problem, pops, rates, base, spec.seed);
        }
        std::ostringstream csv;
        write_grid_csv(csv, grid, label(spec), size);
        if (spec.output) write_file_atomically(*spec.output, csv.str());
        for (const auto& w : grid.winners)
            out << "winner " << label(spec) << " size=" << size << " pop=" << w.population_size
                << " mutation=" << format_real(w.mutation_rate) << " fitness=" << format_real(w.best_fitness)
                << " fevals=" << w.fevals << " iterations=" << w.iterations << '\n';
        if (!spec.output) out << csv.str();
        return kExitOk;
    });
}

int cmd_oracle(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (spec.problem != ProblemKind::kJobSched) throw ConfigError("the oracle only applies to jobsched");
        const TaskSet tasks = resolve_tasks(spec);
        const bool exhaustive = tasks.size() <= kExhaustiveOracleLimit;
        const OracleResult r =
            exhaustive ? exhaustive_schedule_oracle(tasks) : sampled_oracle(tasks, spec.oracle_budget);
        if (spec.output) {
            json j = to_json(r);
            j["exhaustive"] = exhaustive;
            write_file_atomically(*spec.output, j.dump(2) + "\n");
        }
        out << r.max_profit << '\n';
        err << (exhaustive ? "exhaustive" : "sampled") << " oracle: " << r.enumerated << " sequences\n";
        return kExitOk;
    });
}

int cmd_export(const ExperimentSpec& spec, const std::optional<TaskSequence>& sequence, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        if (spec.problem != ProblemKind::kJobSched) throw ConfigError("export applies to jobsched task sets");
        const TaskSet tasks = resolve_tasks(spec);
        json j = {{"tasks", to_json(std::span<const Task>(tasks))}};
        if (const auto opt = certified_optimum(tasks)) j["certified_optimum"] = *opt;
        if (sequence) j["schedule"] = to_json(build_schedule(*sequence, tasks));
        const std::string text = j.dump(2) + "\n";
        if (spec.output)
            write_file_atomically(*spec.output, text);
        else
            out << text;
        return kExitOk;
    });
}

}  // namespace gab::cli
