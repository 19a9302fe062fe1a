#include <benchmark/benchmark.h>

#include "gab/border_trades.hpp"
#include "gab/presets.hpp"

using namespace gab;

namespace {

BitString random_bits(std::size_t n, Rng& rng) {
    return FlipFlopProblem(n).random_individual(rng);
}

TaskSequence random_sequence(const JobSchedulingProblem& p, Rng& rng) { return p.random_individual(rng); }

void BM_FlipFlopFitness(benchmark::State& state) {
    Rng rng(1);
    const auto b = random_bits(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(flip_flop_fitness(b));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FlipFlopFitness)->Arg(28)->Arg(1000);

void BM_BuildSchedule(benchmark::State& state) {
    const JobSchedulingProblem p(presets::task_set(static_cast<std::size_t>(state.range(0))));
    Rng rng(2);
    const auto seq = random_sequence(p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(build_schedule(seq, p.tasks()));
}
BENCHMARK(BM_BuildSchedule)->Arg(18)->Arg(108);

template <TaskSequence (*Trade)(const TaskSequence&, std::span<const Task>, TradeCost*)>
void BM_Trade(benchmark::State& state) {
    const JobSchedulingProblem p(presets::task_set(108));
    Rng rng(3);
    const auto seq = random_sequence(p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(Trade(seq, p.tasks(), nullptr));
}
BENCHMARK(BM_Trade<b_trade>)->Name("BM_BTrade/108");
BENCHMARK(BM_Trade<c1_trade>)->Name("BM_C1Trade/108");
BENCHMARK(BM_Trade<c2_trade>)->Name("BM_C2Trade/108");

// One full recipe run, capped so a single iteration stays short.
void BM_EvolveFlipFlop(benchmark::State& state) {
    const FlipFlopProblem p(28);
    auto cfg = presets::solver_config(*presets::flipflop(28, StrategyKind::kFlipFlopTrade), StrategyKind::kFlipFlopTrade);
    cfg.max_iterations = 200;
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(solve(p, cfg).best_fitness);
    }
}
BENCHMARK(BM_EvolveFlipFlop)->Unit(benchmark::kMillisecond);

void BM_EvolveJobSched(benchmark::State& state) {
    const auto kind = static_cast<StrategyKind>(state.range(0));
    const auto p = presets::jobsched_problem(18);
    auto cfg = presets::solver_config(*presets::jobsched(18, kind), kind);
    cfg.max_iterations = 100;
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(solve(p, cfg).best_fitness);
    }
    state.SetLabel(display_name(kind));
}
BENCHMARK(BM_EvolveJobSched)
    ->Arg(static_cast<int>(StrategyKind::kNone))
    ->Arg(static_cast<int>(StrategyKind::kB))
    ->Arg(static_cast<int>(StrategyKind::kC1))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
