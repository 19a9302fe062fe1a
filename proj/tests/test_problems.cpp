#include <gtest/gtest.h>

#include <set>

#include "gab/baselines.hpp"
#include "gab/problems.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gab;

TEST(FlipFlop, Examples) {
    EXPECT_EQ(flip_flop_fitness(BitString::from_string("0101010")), 6u);
    EXPECT_EQ(flip_flop_fitness(BitString::from_string("0000")), 0u);
    std::string alt;
    for (int i = 0; i < 1000; ++i) alt += static_cast<char>('0' + i % 2);
    EXPECT_EQ(flip_flop_fitness(BitString::from_string(alt)), 999u);
}

TEST(FlipFlop, RejectsShortStrings) {
    EXPECT_THROW(flip_flop_fitness(BitString::from_string("1")), InvalidInput);
    EXPECT_THROW(flip_flop_fitness(BitString{}), InvalidInput);
    EXPECT_THROW(BitString::from_string("01x"), InvalidInput);
}

TEST(FlipFlop, MatchesNaiveCountAndBounds) {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto b = fixtures::random_bits(2 + rng.uniform_int(0, 60), rng);
        const auto f = flip_flop_fitness(b);
        EXPECT_EQ(static_cast<int>(f), oracle::alternations(b.to_string()));
        EXPECT_LE(f, b.size() - 1);
        bool alternates = true;
        for (std::size_t k = 1; k < b.size(); ++k) alternates = alternates && b.bits[k] != b.bits[k - 1];
        EXPECT_EQ(f == b.size() - 1, alternates);
    }
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(BitString::from_string("0110")).to_string(), "1001");
    EXPECT_EQ(complement(BitString::from_string("0101")).to_string(), "1010");
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto b = fixtures::random_bits(1 + rng.uniform_int(0, 40), rng);
        EXPECT_EQ(complement(complement(b)), b);
    }
}

TEST(BuildSchedule, FigureExample) {
    const auto tasks = fixtures::figure_tasks();
    const auto s = build_schedule(identity_sequence(5), tasks);
    const std::vector<std::string> want = {"A0@0-5", "B@5-6", "A3@6-8", "B@8-9", "A4@9-10"};
    EXPECT_EQ(oracle::timeline_of(s), want);
    EXPECT_EQ(s.rejected, (std::vector<std::uint32_t>{1, 2}));
    EXPECT_EQ(schedule_fitness(s), 17);
    EXPECT_EQ(flatten(s).genes, (std::vector<std::uint32_t>{0, 3, 4, 1, 2}));
}

TEST(BuildSchedule, SingleUnitTaskTakesNoBreak) {
    const TaskSet tasks = {{0, 1, 1, 4}};
    const auto s = build_schedule(TaskSequence{{0}}, tasks);
    ASSERT_EQ(s.entries.size(), 1u);
    EXPECT_TRUE(s.entries[0].is_work());
    EXPECT_EQ(s.entries[0].end, 1);
    EXPECT_EQ(s.total_profit, 4);
}

TEST(BuildSchedule, TwoUnitTasksThenBreak) {
    const TaskSet tasks = {{0, 1, 5, 1}, {1, 1, 5, 1}};
    const auto s = build_schedule(TaskSequence{{0, 1}}, tasks);
    const std::vector<std::string> want = {"A0@0-1", "A1@1-2", "B@2-3"};
    EXPECT_EQ(oracle::timeline_of(s), want);
}

TEST(BuildSchedule, CounterResetsAfterBreak) {
    // 1 + 2 units: the break after three units of work clears the counter.
    const TaskSet tasks = {{0, 1, 50, 1}, {1, 2, 50, 1}};
    const auto s = build_schedule(TaskSequence{{0, 1, 0}}, tasks);
    const std::vector<std::string> want = {"A0@0-1", "A1@1-3", "B@3-4", "A0@4-5"};
    EXPECT_EQ(oracle::timeline_of(s), want);
}

TEST(BuildSchedule, ZeroAcceptedGivesZeroProfit) {
    const TaskSet tasks = {{0, 3, 3, 9}, {1, 4, 4, 9}};
    // Task 1 fits once; the repeat would finish at 4+1+4 > 4.
    const auto s = build_schedule(TaskSequence{{1, 1}}, tasks);
    EXPECT_EQ(s.total_profit, 9);
    const TaskSet none = {{0, 2, 2, 5}, {1, 3, 2, 5}};
    const auto r = build_schedule(TaskSequence{{1, 1}}, none);
    EXPECT_TRUE(r.entries.empty());
    EXPECT_EQ(schedule_fitness(r), 0);
    EXPECT_EQ(r.rejected.size(), 2u);
}

TEST(BuildSchedule, RejectsBadGenes) {
    const auto tasks = fixtures::figure_tasks();
    EXPECT_THROW(build_schedule(TaskSequence{{0, 9}}, tasks), InvalidInput);
}

TEST(BuildSchedule, AgreesWithTickSimulator) {
    Rng rng(5);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t n = 1 + rng.uniform_int(0, 11);
        const auto tasks = fixtures::random_tasks(n, rng);
        const auto seq = fixtures::random_sequence(n, rng);
        const auto s = build_schedule(seq, tasks);
        const auto sim = oracle::simulate(seq.genes, tasks);
        ASSERT_EQ(oracle::timeline_of(s), sim.timeline);
        EXPECT_EQ(s.rejected, sim.rejected);
        EXPECT_EQ(s.total_profit, sim.profit);
    }
}

TEST(BuildSchedule, InvariantsHold) {
    Rng rng(17);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t n = 1 + rng.uniform_int(0, 20);
        const auto tasks = fixtures::random_tasks(n, rng);
        const auto seq = fixtures::random_sequence(n, rng);
        const auto s = build_schedule(seq, tasks);
        EXPECT_EQ(check_schedule(s, seq, tasks), "");
        const auto flat = flatten(s);
        EXPECT_EQ(flat.size(), seq.size());
        EXPECT_EQ(oracle::multiset(flat.genes), oracle::multiset(seq.genes));
    }
}

TEST(BuildSchedule, NeverBeatsBruteForce) {
    Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 1 + rng.uniform_int(0, 3);
        const auto tasks = fixtures::random_tasks(n, rng);
        const auto best = oracle::brute_force_max(tasks);
        for (int k = 0; k < 20; ++k)
            EXPECT_LE(schedule_fitness(build_schedule(fixtures::random_sequence(n, rng), tasks)), best);
    }
}

TEST(CheckSchedule, FlagsViolations) {
    const auto tasks = fixtures::figure_tasks();
    const auto seq = identity_sequence(5);
    auto s = build_schedule(seq, tasks);
    auto gap = s;
    gap.entries[1].start += 1;
    EXPECT_NE(check_schedule(gap, seq, tasks), "");
    auto profit = s;
    profit.total_profit += 1;
    EXPECT_NE(check_schedule(profit, seq, tasks), "");
    auto lost = s;
    lost.rejected.pop_back();
    EXPECT_NE(check_schedule(lost, seq, tasks), "");
    auto late = s;
    late.entries.back().task = 0;  // A0 is due at 6
    EXPECT_NE(check_schedule(late, seq, tasks), "");
}

TEST(ValidateTasks, RejectsMalformedSets) {
    EXPECT_THROW(validate_tasks(TaskSet{{1, 1, 1, 1}}), InvalidInput);
    EXPECT_THROW(validate_tasks(TaskSet{{0, 0, 1, 1}}), InvalidInput);
    EXPECT_THROW(validate_tasks(TaskSet{{0, 1, 0, 1}}), InvalidInput);
    EXPECT_THROW(validate_tasks(TaskSet{{0, 1, 1, -1}}), InvalidInput);
    EXPECT_NO_THROW(validate_tasks(TaskSet{{0, 1, 1, 0}}));
}

TEST(GenerateTasks, DeterministicAndWellFormed) {
    EXPECT_EQ(generate_tasks(3, 42), generate_tasks(3, 42));
    EXPECT_NE(generate_tasks(30, 1), generate_tasks(30, 2));
    const auto big = generate_tasks(108, 7);
    std::set<std::uint32_t> ids;
    for (const auto& t : big) ids.insert(t.id);
    EXPECT_EQ(ids.size(), 108u);
    EXPECT_THROW(generate_tasks(0, 1), InvalidInput);
}

TEST(GenerateTasks, RangesHoldAcrossSeeds) {
    const TaskGeneratorConfig cfg;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 1 + seed % 12;
        for (const auto& t : generate_tasks(n, seed, cfg)) {
            EXPECT_GE(t.deadline, t.duration);
            EXPECT_LE(t.deadline, std::max<std::int64_t>(t.duration, cfg.deadline_factor * static_cast<std::int64_t>(n)));
            EXPECT_GE(t.duration, cfg.duration_min);
            EXPECT_LE(t.duration, cfg.duration_max);
            EXPECT_GE(t.profit, cfg.profit_min);
            EXPECT_LE(t.profit, cfg.profit_max);
            // Schedulable in isolation.
            EXPECT_EQ(build_schedule(TaskSequence{{0}}, std::vector<Task>{{0, t.duration, t.deadline, t.profit}})
                          .rejected.size(),
                      0u);
        }
    }
}

TEST(Problems, AdaptersRespectDomains) {
    Rng rng(1);
    const FlipFlopProblem ff(9);
    EXPECT_EQ(ff.known_optimum(), 8.0);
    auto b = ff.random_individual(rng);
    EXPECT_EQ(b.size(), 9u);
    const auto before = b;
    ff.mutate_gene(b, 4, rng);
    EXPECT_NE(b.bits[4], before.bits[4]);
    EXPECT_THROW(FlipFlopProblem(1), InvalidInput);

    const JobSchedulingProblem js(fixtures::figure_tasks());
    EXPECT_FALSE(js.known_optimum().has_value());
    for (int i = 0; i < 200; ++i) {
        auto s = js.random_individual(rng);
        js.mutate_gene(s, 2, rng);
        for (auto g : s.genes) EXPECT_LT(g, 5u);
    }
    EXPECT_DOUBLE_EQ(js.fitness(identity_sequence(5)), 17.0);
}
