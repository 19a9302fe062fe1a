#include <gtest/gtest.h>

#include <cmath>

#include "gab/experiments.hpp"
#include "gab/presets.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gab;

namespace {

std::vector<TraceRecord> trace_of(std::vector<double> fitness) {
    std::vector<TraceRecord> r;
    for (std::size_t i = 0; i < fitness.size(); ++i) r.push_back({i, fitness[i], i + 1, 0.1 * double(i)});
    return r;
}

}  // namespace

TEST(Aggregate, MeanStdAndForwardFill) {
    const std::vector<std::vector<TraceRecord>> runs = {trace_of({1, 3, 5}), trace_of({3, 7})};
    const auto s = aggregate(runs);
    EXPECT_TRUE(s.forward_filled);
    ASSERT_EQ(s.length(), 3u);
    EXPECT_DOUBLE_EQ(s.mean_fitness[0], 2.0);
    EXPECT_DOUBLE_EQ(s.std_fitness[0], 1.0);  // population std
    EXPECT_DOUBLE_EQ(s.mean_fitness[2], 6.0);  // 5 and the held 7
    EXPECT_DOUBLE_EQ(s.mean_fevals[2], 2.5);
    EXPECT_DOUBLE_EQ(s.std_fevals[2], 0.5);
    EXPECT_THROW(aggregate(std::vector<std::vector<TraceRecord>>{}), InvalidInput);
    EXPECT_THROW(aggregate(std::vector<std::vector<TraceRecord>>{{}}), InvalidInput);
}

TEST(Aggregate, SingleRunHasZeroSpread) {
    const std::vector<std::vector<TraceRecord>> runs = {trace_of({4, 2, 9})};
    const auto s = aggregate(runs);
    EXPECT_FALSE(s.forward_filled);
    for (double v : s.std_fitness) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(s.mean_fitness, (std::vector<double>{4, 2, 9}));
}

TEST(Batch, SeedsAreConsecutive) {
    std::vector<std::uint64_t> seen;
    const auto s = run_batch_with(4, 100, [&](std::uint64_t seed) {
        seen.push_back(seed);
        RunTrace<BitString> t;
        t.records = trace_of({double(seed)});
        t.best_fitness = double(seed);
        return t;
    });
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{100, 101, 102, 103}));
    EXPECT_EQ(s.runs(), 4u);
    EXPECT_DOUBLE_EQ(s.mean_fitness[0], 101.5);
    EXPECT_THROW(run_batch_with(0, 0, [](std::uint64_t) { return RunTrace<BitString>{}; }), ConfigError);
}

TEST(Batch, RepeatableGaBatches) {
    const FlipFlopProblem p(14);
    SolverConfig cfg;
    cfg.max_iterations = 80;
    const auto a = run_batch(p, cfg, 3, 9);
    const auto b = run_batch(p, cfg, 3, 9);
    EXPECT_EQ(a.mean_fitness, b.mean_fitness);
    EXPECT_EQ(a.mean_fevals, b.mean_fevals);
    EXPECT_EQ(a.termination_iterations, b.termination_iterations);
}

TEST(Convergence, Examples) {
    const std::vector<double> c = {1, 4, 6, 5.6, 6, 6};
    const auto r = detect_convergence(c, 6);
    EXPECT_EQ(r.converged_at, 2u);
    EXPECT_EQ(r.semi_converged_at, 2u);
    const std::vector<double> dip = {1, 6, 5.4, 6, 6};
    EXPECT_EQ(detect_convergence(dip, 6).converged_at, 3u);
    EXPECT_EQ(detect_convergence(dip, 6).semi_converged_at, 1u);
    const std::vector<double> never = {1, 2, 5.2};
    const auto n = detect_convergence(never, 6);
    EXPECT_FALSE(n.converged());
    EXPECT_EQ(n.semi_converged_at, 2u);
    EXPECT_EQ(n.target, 6.0);
    const std::vector<double> at_start = {6, 6};
    EXPECT_EQ(detect_convergence(at_start, 6).converged_at, 0u);
    EXPECT_THROW(detect_convergence(std::vector<double>{}, 1), InvalidInput);
}

TEST(Convergence, ReferenceCurves) {
    const std::vector<double> rising = {5, 6, 7, 7, 7};
    EXPECT_EQ(detect_convergence(rising, 7).converged_at, 2u);
    const std::vector<double> short_of(6, 6.2);
    const auto r = detect_convergence(short_of, 7);
    EXPECT_FALSE(r.converged());
    EXPECT_EQ(r.semi_converged_at, 0u);
    const std::vector<double> touch = {5, 7, 6.4, 6.4};
    EXPECT_FALSE(detect_convergence(touch, 7).converged());
}

TEST(Convergence, DipAfterConvergenceInvalidatesIt) {
    Rng rng(61);
    for (int i = 0; i < 3000; ++i) {
        std::vector<double> c(2 + rng.uniform_int(0, 30));
        for (auto& x : c) x = 10.0 - 0.1 * double(rng.uniform_int(0, 8));
        const auto r = detect_convergence(c, 10.0);
        if (!r.converged_at) continue;
        const auto at = *r.converged_at + rng.uniform_int(0, c.size() - 1 - *r.converged_at);
        c.insert(c.begin() + static_cast<std::ptrdiff_t>(at) + 1, 9.4);
        const auto after = detect_convergence(c, 10.0);
        EXPECT_TRUE(!after.converged_at || *after.converged_at > at);
    }
}

TEST(Convergence, MatchesLiteralDefinition) {
    Rng rng(19);
    for (int i = 0; i < 5000; ++i) {
        std::vector<double> c(1 + rng.uniform_int(0, 30));
        for (auto& x : c) x = 8.0 + 0.25 * double(rng.uniform_int(0, 12)) - 2.0;
        const auto r = detect_convergence(c, 8.0);
        EXPECT_EQ(r.converged_at, oracle::converged_at(c, 8.0, 0.5));
        EXPECT_EQ(r.semi_converged_at, oracle::converged_at(c, 8.0, 1.0));
        if (r.converged_at && r.semi_converged_at) {
            EXPECT_LE(*r.semi_converged_at, *r.converged_at);
        }
    }
}

TEST(Elbow, ClassicKnee) {
    std::vector<double> c;
    for (int i = 0; i <= 20; ++i) c.push_back(i < 5 ? 20.0 * i : 100.0 + i);
    const auto e = detect_elbow(c);
    EXPECT_EQ(e.index, 5u);
    EXPECT_FALSE(e.degenerate);
    EXPECT_EQ(e.fitness, c[5]);
}

TEST(Elbow, DegenerateCurves) {
    const std::vector<double> flat(10, 3.0);
    EXPECT_TRUE(detect_elbow(flat).degenerate);
    EXPECT_EQ(detect_elbow(flat).index, 0u);
    std::vector<double> line;
    for (int i = 0; i < 10; ++i) line.push_back(2.0 * i);
    EXPECT_TRUE(detect_elbow(line).degenerate);
    EXPECT_THROW(detect_elbow(std::vector<double>{1, 2}), InvalidInput);
}

TEST(Elbow, MatchesTextbookDistance) {
    Rng rng(29);
    for (int i = 0; i < 2000; ++i) {
        std::vector<double> c(3 + rng.uniform_int(0, 40));
        for (auto& x : c) x = double(rng.uniform_int(0, 1000));
        if (*std::min_element(c.begin(), c.end()) == *std::max_element(c.begin(), c.end())) continue;
        EXPECT_EQ(detect_elbow(c).index, oracle::elbow_index(c));
    }
}

TEST(Elbow, ExponentialSaturationKnee) {
    // 1 - exp(-t / tau) over 300 samples: the knee sits near tau * ln(N / tau).
    std::vector<double> c;
    const double tau = 10.0;
    for (int i = 0; i < 300; ++i) c.push_back(100.0 * (1 - std::exp(-i / tau)));
    const auto e = detect_elbow(c);
    const double analytic = tau * std::log(299.0 / tau);
    EXPECT_NEAR(double(e.index), analytic, 2.0);
}

TEST(Elbow, ReferenceCurves) {
    const std::vector<double> step = {0, 10, 10, 10, 10};
    EXPECT_EQ(detect_elbow(step).index, 1u);
    // 100 samples of 1 - exp(-i/10): maximising the chord distance gives
    // i = 10 * ln(99 / 10), about 22.9.
    std::vector<double> c;
    for (int i = 0; i < 100; ++i) c.push_back(1 - std::exp(-i / 10.0));
    const double analytic = 10.0 * std::log(99.0 / (10.0 * (1 - std::exp(-9.9))));
    EXPECT_NEAR(double(detect_elbow(c).index), analytic, 1.0);
    EXPECT_EQ(detect_elbow(c).index, oracle::elbow_index(c));
}

TEST(Elbow, StatsVariantReadsStd) {
    const std::vector<std::vector<TraceRecord>> runs = {trace_of({0, 10, 10, 10}), trace_of({0, 8, 10, 10})};
    const auto s = aggregate(runs);
    const auto e = detect_elbow(s);
    EXPECT_EQ(e.index, 1u);
    EXPECT_DOUBLE_EQ(e.std_dev, 1.0);
}

TEST(Summary, ReadsMetricsAtConvergence) {
    const std::vector<std::vector<TraceRecord>> runs = {trace_of({0, 3, 6, 6})};
    const auto s = summarize(aggregate(runs), 6);
    EXPECT_EQ(s.report.converged_at, 2u);
    EXPECT_DOUBLE_EQ(s.mean_fevals, 3.0);
    EXPECT_DOUBLE_EQ(s.mean_time, 0.2);
    EXPECT_DOUBLE_EQ(s.max_mean_fitness, 6.0);
}

TEST(Grid, RankingAndTies) {
    std::vector<GridRow> rows = {
        {10, 0.1, 5, 30, 20, 9.0}, {20, 0.1, 6, 40, 30, 1.0}, {30, 0.2, 6, 40, 30, 0.1}, {40, 0.2, 6, 35, 50, 5.0}};
    const auto g = rank_grid(rows);
    ASSERT_EQ(g.rows.size(), 4u);
    EXPECT_EQ(g.rows[0].population_size, 40u);
    ASSERT_EQ(g.winners.size(), 1u);
    rows[3].fevals = 40;
    rows[3].iterations = 30;
    const auto t = rank_grid(rows);
    // Time never breaks a tie; input order is kept.
    ASSERT_EQ(t.winners.size(), 3u);
    EXPECT_EQ(t.winners[0].population_size, 20u);
    EXPECT_EQ(t.rows.back().population_size, 10u);
}

TEST(Grid, TuneIsDeterministic) {
    const FlipFlopProblem p(7);
    const std::vector<std::size_t> pops = {3, 6};
    const std::vector<double> rates = {0.1, 0.4};
    SolverConfig base;
    const auto a = grid_tune(p, pops, rates, base, 4);
    const auto b = grid_tune(p, pops, rates, base, 4);
    ASSERT_EQ(a.rows.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(a.rows[i].population_size, b.rows[i].population_size);
        EXPECT_EQ(a.rows[i].best_fitness, b.rows[i].best_fitness);
        EXPECT_EQ(a.rows[i].fevals, b.rows[i].fevals);
    }
    EXPECT_THROW(grid_tune(p, std::vector<std::size_t>{}, rates, base, 0), ConfigError);
}

TEST(Presets, PublishedRecipes) {
    EXPECT_EQ(presets::flipflop(7, StrategyKind::kNone)->population_size, 3u);
    EXPECT_DOUBLE_EQ(presets::flipflop(14, StrategyKind::kFlipFlopTrade)->mutation_rate, 0.5);
    EXPECT_DOUBLE_EQ(presets::flipflop(28, StrategyKind::kNone)->mutation_rate, 0.1);
    EXPECT_DOUBLE_EQ(presets::flipflop(28, StrategyKind::kFlipFlopTrade)->mutation_rate, 0.2);
    EXPECT_FALSE(presets::flipflop(9, StrategyKind::kNone));
    EXPECT_EQ(presets::jobsched(3, StrategyKind::kNone)->population_size, 4u);
    EXPECT_EQ(presets::jobsched(3, StrategyKind::kB)->population_size, 5u);
    EXPECT_DOUBLE_EQ(presets::jobsched(10, StrategyKind::kB)->mutation_rate, 0.07);
    EXPECT_FALSE(presets::jobsched(4, StrategyKind::kB));
    for (std::size_t n : {7u, 14u, 28u, 1000u}) {
        const auto hp = presets::flipflop(n, StrategyKind::kFlipFlopTrade);
        ASSERT_TRUE(hp);
        EXPECT_NO_THROW(presets::solver_config(*hp, StrategyKind::kFlipFlopTrade).validate());
    }
    const auto cfg = presets::solver_config(*presets::jobsched(7, StrategyKind::kB), StrategyKind::kB);
    EXPECT_EQ(cfg.mutation_mode, presets::kMutation);
    EXPECT_EQ(cfg.strategy, StrategyKind::kB);
}

TEST(Presets, TaskSetsAndTargets) {
    EXPECT_EQ(presets::task_set(10), generate_tasks(10, presets::kTaskSeed, presets::task_generator()));
    EXPECT_EQ(presets::jobsched_problem(3).known_optimum(), 180.0);
    EXPECT_EQ(presets::jobsched_problem(3).known_optimum(),
              double(oracle::brute_force_max(presets::task_set(3))));
    for (std::size_t n : {7u, 10u, 13u, 18u}) EXPECT_TRUE(presets::jobsched_problem(n).known_optimum());
    EXPECT_FALSE(presets::jobsched_problem(108).known_optimum());
    EXPECT_EQ(presets::task_set(108).size(), 108u);
}
