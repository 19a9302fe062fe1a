#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gab/cli/commands.hpp"

namespace {

using gab::cli::ExperimentSpec;

// Flags shared by run, tune, oracle and export; anything given on the command
// line overrides the JSON config.
struct Flags {
    std::optional<std::string> config, problem, algorithm, strategy, mutation_mode, fevals, tasks, out, summary,
        sequence;
    std::optional<std::size_t> size, runs, pop, elite, max_iters, max_attempts;
    std::optional<double> mutation;
    std::optional<std::uint64_t> seed, task_seed, budget;
    std::vector<std::size_t> pops;
    std::vector<double> rates;
};

void add_experiment_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON experiment config")->check(CLI::ExistingFile);
    cmd->add_option("--problem", f.problem, "flipflop | jobsched");
    cmd->add_option("--size", f.size, "problem size (bits or tasks)");
    cmd->add_option("--algorithm", f.algorithm, "ga | gab | sa | oracle");
    cmd->add_option("--strategy", f.strategy, "none | ffbt | a1 | a2 | b | c1 | c2");
    cmd->add_option("--runs", f.runs, "runs per batch (default 10)");
    cmd->add_option("--seed", f.seed, "base seed; run i uses seed + i");
    cmd->add_option("--pop", f.pop, "population size (default: published recipe)");
    cmd->add_option("--mutation", f.mutation, "mutation rate (default: published recipe)");
    cmd->add_option("--elite", f.elite, "survivors carried per generation");
    cmd->add_option("--mutation-mode", f.mutation_mode, "per-individual | per-gene");
    cmd->add_option("--fevals", f.fevals, "per-generation | every-evaluation");
    cmd->add_option("--max-iters", f.max_iters, "iteration cap (default 2048)");
    cmd->add_option("--max-attempts", f.max_attempts, "non-improving iterations before stopping (default 500)");
    cmd->add_option("--tasks", f.tasks, "task set JSON (jobsched)")->check(CLI::ExistingFile);
    cmd->add_option("--task-seed", f.task_seed, "seed of the generated task set");
    cmd->add_option("--budget", f.budget, "sampled-oracle budget for sets above six tasks");
    cmd->add_option("--out", f.out, "output file");
}

ExperimentSpec build_spec(const Flags& f) {
    ExperimentSpec s;
    if (f.config) {
        std::ifstream in(*f.config);
        s = gab::cli::spec_from_json(nlohmann::json::parse(in));
    }
    if (f.problem) s.problem = gab::cli::parse_problem(*f.problem);
    if (f.size) s.size = *f.size;
    if (f.algorithm) s.algorithm = gab::cli::parse_algorithm(*f.algorithm);
    if (f.strategy) s.strategy = gab::parse_strategy(*f.strategy);
    if (f.runs) s.runs = *f.runs;
    if (f.seed) s.seed = *f.seed;
    if (f.pop) s.population_size = *f.pop;
    if (f.mutation) s.mutation_rate = *f.mutation;
    if (f.elite) s.elite_count = *f.elite;
    if (f.mutation_mode) s.mutation_mode = gab::parse_mutation_mode(*f.mutation_mode);
    if (f.fevals) s.accounting = gab::parse_accounting(*f.fevals);
    if (f.max_iters) s.max_iterations = *f.max_iters;
    if (f.max_attempts) s.max_attempts = *f.max_attempts;
    if (f.tasks) s.tasks_file = *f.tasks;
    if (f.task_seed) s.task_seed = *f.task_seed;
    if (f.budget) s.oracle_budget = *f.budget;
    if (!f.pops.empty()) s.population_grid = f.pops;
    if (!f.rates.empty()) s.mutation_grid = f.rates;
    if (f.out) s.output = *f.out;
    if (f.summary) s.summary = *f.summary;
    return s;
}

gab::TaskSequence parse_sequence(const std::string& text) {
    gab::TaskSequence seq;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) seq.genes.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return seq;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genetic algorithms with border trades: experiments, tuning and table recipes"};
    app.require_subcommand(1);
    Flags flags;

    auto* run = app.add_subcommand("run", "run a batch and write its mean/std curve as CSV");
    add_experiment_flags(run, flags);
    run->add_option("--summary", flags.summary, "also write a JSON summary here");

    auto* tune = app.add_subcommand("tune", "grid-search population size and mutation rate");
    add_experiment_flags(tune, flags);
    tune->add_option("--pops", flags.pops, "population sizes")->delimiter(',');
    tune->add_option("--rates", flags.rates, "mutation rates")->delimiter(',');

    auto* oracle = app.add_subcommand("oracle", "brute-force the best schedule of a task set");
    add_experiment_flags(oracle, flags);

    auto* exporter = app.add_subcommand("export", "write a task set (and optionally a schedule) as JSON");
    add_experiment_flags(exporter, flags);
    exporter->add_option("--sequence", flags.sequence, "comma-separated task indices to schedule");

    gab::cli::TableOptions table_opts;
    std::string recipe;
    std::optional<std::string> table_out;
    auto* table = app.add_subcommand("table", "reproduce one of the published tables");
    table->add_option("recipe", recipe, "table1 | table2 | table3 | table4")->required();
    table->add_option("--runs", table_opts.runs, "runs per batch");
    table->add_option("--seed", table_opts.seed, "base seed");
    table->add_flag("--slow", table_opts.slow, "include the size-1000 and size-108 experiments");
    table->add_option("--out", table_out, "output CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            if (table_out) table_opts.output = *table_out;
            return gab::cli::cmd_table(recipe, table_opts, std::cout, std::cerr);
        }
        const ExperimentSpec spec = build_spec(flags);
        if (run->parsed()) return gab::cli::cmd_run(spec, std::cout, std::cerr);
        if (tune->parsed()) return gab::cli::cmd_tune(spec, std::cout, std::cerr);
        if (oracle->parsed()) {
            ExperimentSpec s = spec;
            s.problem = gab::cli::ProblemKind::kJobSched;
            return gab::cli::cmd_oracle(s, std::cout, std::cerr);
        }
        ExperimentSpec s = spec;
        s.problem = gab::cli::ProblemKind::kJobSched;
        std::optional<gab::TaskSequence> seq;
        if (flags.sequence) seq = parse_sequence(*flags.sequence);
        return gab::cli::cmd_export(s, seq, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
