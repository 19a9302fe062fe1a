#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "gab/border_trades.hpp"
#include "gab/io.hpp"
#include "gab/presets.hpp"
#include "detail.hpp"

namespace gab::cli {

namespace {

std::string cell(const std::optional<std::size_t>& i) { return i ? std::to_string(*i) : "N/A"; }
std::string cell(bool present, double v) { return present ? format_real(v) : "N/A"; }

SolverConfig recipe(std::optional<presets::Hyperparameters> hp, StrategyKind s, std::uint64_t seed) {
    if (!hp) throw ConfigError("no published hyperparameters for this size");
    SolverConfig cfg = presets::solver_config(*hp, s);
    cfg.seed = seed;
    return cfg;
}

// Convergence iterations of SA, GA and GAB on Flip-Flop.
std::string table1(const TableOptions& o) {
    std::vector<std::size_t> sizes = {7, 14, 28};
    if (o.slow) sizes.push_back(1000);
    std::ostringstream csv;
    csv << "algorithm";
    for (auto n : sizes) csv << ',' << n;
    csv << '\n';
    std::vector<std::string> rows[3] = {{"SA"}, {"GA"}, {"GAB"}};
    for (auto n : sizes) {
        const FlipFlopProblem problem(n);
        const double target = static_cast<double>(n - 1);
        rows[0].push_back(cell(
            detect_convergence(run_sa_batch(problem, presets::annealing(), o.runs, o.seed).mean_fitness, target)
                .converged_at));
        for (int k = 1; k <= 2; ++k) {
            const auto s = k == 1 ? StrategyKind::kNone : StrategyKind::kFlipFlopTrade;
            const auto stats = run_batch(problem, recipe(presets::flipflop(n, s), s, o.seed), o.runs, o.seed);
            rows[k].push_back(cell(detect_convergence(stats.mean_fitness, target).converged_at));
        }
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << row[i];
        csv << '\n';
    }
    return csv.str();
}

struct StrategyBatch {
    StrategyKind strategy;
    BatchStats stats;
};

std::vector<StrategyBatch> strategy_batches(const TableOptions& o) {
    const auto problem = presets::jobsched_problem(108);
    std::vector<StrategyBatch> out;
    for (auto s : {StrategyKind::kNone, StrategyKind::kA1, StrategyKind::kA2, StrategyKind::kB, StrategyKind::kC1,
                   StrategyKind::kC2})
        out.push_back({s, run_batch(problem, recipe(presets::jobsched(108, s), s, o.seed), o.runs, o.seed)});
    return out;
}

// Maximum of each mean curve on the size-108 set.
std::string table2(const TableOptions& o) {
    std::ostringstream csv;
    csv << "algorithm,fitness,time_s,fevals\n";
    for (const auto& [s, st] : strategy_batches(o)) {
        csv << display_name(s) << ',' << format_real(*std::max_element(st.mean_fitness.begin(), st.mean_fitness.end()))
            << ',' << format_real(*std::max_element(st.mean_time.begin(), st.mean_time.end())) << ','
            << format_real(*std::max_element(st.mean_fevals.begin(), st.mean_fevals.end())) << '\n';
    }
    return csv.str();
}

// Turning points of the same curves.
std::string table3(const TableOptions& o) {
    std::ostringstream csv;
    csv << "algorithm,iteration,fitness,std_dev\n";
    for (const auto& [s, st] : strategy_batches(o)) {
        const auto e = detect_elbow(st);
        csv << display_name(s) << ',' << e.index << ',' << format_real(e.fitness) << ',' << format_real(e.std_dev)
            << '\n';
    }
    return csv.str();
}

// GA against GAB-B across the small job-scheduling sets.
std::string table4(const TableOptions& o) {
    std::ostringstream csv;
    csv << "algorithm,size,iteration,time_s,fevals\n";
    for (std::size_t n : {3, 7, 10, 13, 18}) {
        const auto problem = presets::jobsched_problem(n);
        BatchStats stats[2];
        const StrategyKind kinds[2] = {StrategyKind::kNone, StrategyKind::kB};
        for (int k = 0; k < 2; ++k)
            stats[k] = run_batch(problem, recipe(presets::jobsched(n, kinds[k]), kinds[k], o.seed), o.runs, o.seed);
        const double target = problem.known_optimum().value_or(
            std::max(empirical_target(stats[0]), empirical_target(stats[1])));
        for (int k = 0; k < 2; ++k) {
            const auto sum = summarize(stats[k], target);
            const bool ok = sum.report.converged();
            csv << display_name(kinds[k]) << ',' << n << ',' << cell(sum.report.converged_at) << ','
                << cell(ok, sum.mean_time) << ',' << cell(ok, sum.mean_fevals) << '\n';
        }
    }
    return csv.str();
}

}  // namespace

int cmd_table(const std::string& recipe_id, const TableOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.runs < 1) throw ConfigError("runs must be at least 1");
        std::string csv;
        if (recipe_id == "table1") {
            csv = table1(options);
        } else if (recipe_id == "table2" || recipe_id == "table3") {
            if (!options.slow) throw ConfigError(recipe_id + " runs the size-108 set; pass --slow");
            csv = recipe_id == "table2" ? table2(options) : table3(options);
        } else if (recipe_id == "table4") {
            csv = table4(options);
        } else {
            throw ConfigError("unknown table '" + recipe_id + "' (expected table1, table2, table3 or table4)");
        }
        if (options.output)
            write_file_atomically(*options.output, csv);
        else
            out << csv;
        return kExitOk;
    });
}

}  // namespace gab::cli
