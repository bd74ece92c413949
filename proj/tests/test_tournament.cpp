// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "forecastlab/errors.hpp"
#include "forecastlab/tournament.hpp"

using namespace forecastlab;

namespace {

ContinuousTournamentConfig small_continuous_config() {
    ContinuousTournamentConfig config;
    config.n_questions = 5;
    config.questions = GeneratedSpreadQuestions{20.0, 2.0};
    config.focal = ContinuousFocal{"focal", DistortionPolicy{0.0, -10.0, 1}};
    config.population = {ContinuousProfile{Archetype::NoisySkilled,
                                           "average_user",
                                           30,
                                           MeanErrorLogistic{5.0, 5.0},
                                           SpreadErrorLogistic{5.0, 5.0}}};
    config.prior_blend = 0.5;
    config.top_k = 3;
    config.replicas = 300;
    config.master_seed = 99;
    return config;
}

BinaryTournamentConfig appendix_binary_config(std::uint64_t replicas) {
    BinaryTournamentConfig config;
    config.n_questions = 10;
    config.population = {
        BinaryProfile{Archetype::NoisySkilled, "noisy_skilled", 10, 0.5},
        BinaryProfile{Archetype::UnsophisticatedExtremizer, "unsophisticated", 10, 0.5, 0.3},
        BinaryProfile{Archetype::SophisticatedExtremizer, "sophisticated", 5, 0.5},
        BinaryProfile{Archetype::Unskilled, "unskilled", 10, 2.0},
    };
    config.top_k = 5;
    config.replicas = replicas;
    config.master_seed = 4242;
    return config;
}

}  // namespace

TEST_CASE("continuous simulation is deterministic and mode-independent") {
    const auto config = small_continuous_config();
    const SimulationSummary first = simulate_continuous(config, ExecMode::Parallel);
    const SimulationSummary second = simulate_continuous(config, ExecMode::Parallel);
    const SimulationSummary serial = simulate_continuous(config, ExecMode::Serial);
    CHECK(first == second);
    CHECK(first == serial);
}

TEST_CASE("binary simulation is deterministic and mode-independent") {
    const auto config = appendix_binary_config(500);
    CHECK(simulate_binary(config, ExecMode::Parallel) == simulate_binary(config, ExecMode::Serial));
}

TEST_CASE("replica streams are independent of the replica count") {
    auto config = small_continuous_config();
    config.record_replicas = true;
    config.replicas = 8;
    const SimulationSummary small = simulate_continuous(config);
    config.replicas = 16;
    const SimulationSummary large = simulate_continuous(config);
    REQUIRE(small.per_replica_focal_score.size() == 8);
    REQUIRE(large.per_replica_focal_score.size() == 16);
    for (std::size_t r = 0; r < 8; ++r) {
        CHECK(small.per_replica_focal_score[r] == large.per_replica_focal_score[r]);
    }
}

TEST_CASE("top-k slots always sum to k per replica") {
    const auto config = small_continuous_config();
    const SimulationSummary summary = simulate_continuous(config);
    std::uint64_t slots = summary.focal_topk_count;
    for (const ProfileStats& stats : summary.profiles) {
        slots += stats.topk_count;
    }
    CHECK(slots == static_cast<std::uint64_t>(config.top_k) * summary.replica_count);

    const SimulationSummary binary = simulate_binary(appendix_binary_config(400));
    std::uint64_t binary_slots = 0;
    for (const ProfileStats& stats : binary.profiles) {
        binary_slots += stats.topk_count;
    }
    CHECK(binary_slots == 5ULL * binary.replica_count);
}

TEST_CASE("a lone pair of identical perfect forecasters ties at random") {
    ContinuousTournamentConfig config;
    config.n_questions = 5;
    config.questions = GeneratedSpreadQuestions{20.0, 2.0};
    config.focal = ContinuousFocal{"focal", std::nullopt};
    config.population = {
        ContinuousProfile{Archetype::Perfect, "twin", 1, MeanExact{}, SpreadExact{}}};
    config.top_k = 1;
    config.replicas = 10000;
    config.master_seed = 5;
    const SimulationSummary summary = simulate_continuous(config);
    CHECK(std::fabs(summary.focal_topk_frequency() - 0.5) < 0.02);
    CHECK(summary.focal_topk_count + summary.profiles[0].topk_count == summary.replica_count);
}

TEST_CASE("a single-profile population splits the prize slots evenly") {
    ContinuousTournamentConfig config;
    config.n_questions = 3;
    config.questions = FixedQuestions{50.0, 10.0};
    config.population = {
        ContinuousProfile{Archetype::Perfect, "perfect", 100, MeanExact{}, SpreadExact{}}};
    config.top_k = 5;
    config.replicas = 200;
    config.master_seed = 21;
    const SimulationSummary summary = simulate_continuous(config);
    // All 100 scores tie every replica; the profile as a whole still gets
    // exactly k slots per replica.
    CHECK(summary.topk_frequency(0) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("a solo forecaster always ranks first") {
    BinaryTournamentConfig config;
    config.n_questions = 4;
    config.population = {BinaryProfile{Archetype::NoisySkilled, "a", 1, 0.5},
                         BinaryProfile{Archetype::Unskilled, "b", 1, 2.0}};
    config.top_k = 2;
    config.replicas = 50;
    config.master_seed = 3;
    const SimulationSummary summary = simulate_binary(config);
    CHECK(summary.topk_frequency(0) == doctest::Approx(1.0));
    CHECK(summary.topk_frequency(1) == doctest::Approx(1.0));
}

TEST_CASE("binary archetype ordering matches the expected tournament pattern") {
    const SimulationSummary summary = simulate_binary(appendix_binary_config(4000));
    const double noisy = summary.topk_frequency(0);
    const double unsoph = summary.topk_frequency(1);
    const double soph = summary.topk_frequency(2);
    const double unskilled = summary.topk_frequency(3);
    CHECK(soph > unskilled);
    CHECK(unskilled > unsoph);
    CHECK(unsoph > noisy);
    // Honest skill still wins on the mean score.
    CHECK(summary.mean_score(0) < summary.mean_score(1));
    CHECK(summary.mean_score(0) < summary.mean_score(2));
    CHECK(summary.mean_score(0) < summary.mean_score(3));
}

TEST_CASE("community copiers never have a positive mean relative score") {
    BinaryTournamentConfig config;
    config.n_questions = 8;
    config.population = {
        BinaryProfile{Archetype::NoisySkilled, "noisy", 12, 0.5},
        BinaryProfile{Archetype::Unskilled, "unskilled", 8, 2.0},
        BinaryProfile{Archetype::CommunityCopier, "copier", 3},
    };
    config.rule = ScoringRuleSpec::plain(RuleKind::RelativeBrier);
    config.replicas = 2000;
    config.master_seed = 77;
    const SimulationSummary summary = simulate_binary(config);
    CHECK(summary.mean_score(2) <= 1e-12);
}

TEST_CASE("sophisticated extremizers go all-in on their most uncertain question") {
    // With one question the base forecast is always replaced by 0 or 1, so
    // the mean Brier equals the outcome frequency conditional structure;
    // check the reports only take the two extreme values via the score range.
    BinaryTournamentConfig config;
    config.n_questions = 1;
    config.population = {BinaryProfile{Archetype::SophisticatedExtremizer, "soph", 1, 0.5},
                         BinaryProfile{Archetype::NoisySkilled, "noisy", 1, 0.5}};
    config.replicas = 200;
    config.master_seed = 11;
    config.focal_individual = 0;
    config.record_replicas = true;
    const SimulationSummary summary = simulate_binary(config);
    for (double score : summary.per_replica_focal_score) {
        CHECK((score == 0.0 || score == 1.0));
    }
}

TEST_CASE("question-count sweep favors honest skill at larger sizes") {
    auto config = appendix_binary_config(3000);
    const std::vector<int> grid{5, 50};
    const auto points = sweep_question_count(config, grid);
    REQUIRE(points.size() == 2);
    CHECK(points[0].n_questions == 5);
    CHECK(points[1].n_questions == 50);
    CHECK(points[1].honest_best_frequency() > points[0].honest_best_frequency());
}

TEST_CASE("sybil puppets improve the attacker's relative score and nothing else") {
    BinaryTournamentConfig config;
    config.n_questions = 10;
    config.population = {
        BinaryProfile{Archetype::NoisySkilled, "attacker", 1, 0.5},
        BinaryProfile{Archetype::NoisySkilled, "rivals", 20, 0.5},
    };
    config.rule = ScoringRuleSpec::plain(RuleKind::RelativeBrier);
    config.replicas = 4000;
    config.master_seed = 2026;

    const SybilOutcome null_arm = sybil_experiment(config, 0);
    CHECK(null_arm.attacker_relative_without == null_arm.attacker_relative_with);

    const SybilOutcome outcome = sybil_experiment(config, 10);
    // Absolute accuracy is untouched bit for bit.
    CHECK(outcome.attacker_brier_without == outcome.attacker_brier_with);
    // Relative score improves (lower is better).
    CHECK(outcome.attacker_relative_with < outcome.attacker_relative_without);
    double mean_diff = 0.0;
    for (double d : outcome.paired_diffs) {
        mean_diff += d;
    }
    mean_diff /= static_cast<double>(outcome.paired_diffs.size());
    CHECK(mean_diff < 0.0);
}

TEST_CASE("relative scoring supports both crowd baselines") {
    BinaryTournamentConfig config;
    config.n_questions = 6;
    config.population = {BinaryProfile{Archetype::NoisySkilled, "noisy", 8, 0.5},
                         BinaryProfile{Archetype::Unskilled, "unskilled", 8, 2.0}};
    config.rule = ScoringRuleSpec::plain(RuleKind::RelativeBrier);
    config.replicas = 1500;
    config.master_seed = 404;

    config.relative_baseline = RelativeBaseline::MeanOfOthers;
    const SimulationSummary mean_of_others = simulate_binary(config);
    config.relative_baseline = RelativeBaseline::AggregateBrier;
    const SimulationSummary aggregate = simulate_binary(config);

    // Different baselines, same direction: the skilled group beats the crowd
    // under both conventions, and the two scores genuinely differ.
    CHECK(mean_of_others.mean_score(0) < 0.0);
    CHECK(aggregate.mean_score(0) != mean_of_others.mean_score(0));
    // Against the aggregate forecast the crowd baseline is harder to beat
    // (the mean forecast outscores the mean of the scores by convexity), so
    // relative scores shift up as a group.
    CHECK(aggregate.mean_score(0) > mean_of_others.mean_score(0));
    CHECK(aggregate.mean_score(1) > mean_of_others.mean_score(1));
}

TEST_CASE("population mix config builds the six-group population") {
    PopulationMixParams params;
    params.replicas = 50;
    params.master_seed = 8;
    const ContinuousTournamentConfig config = population_mix_config(params);
    int total = config.focal ? 1 : 0;
    for (const ContinuousProfile& profile : config.population) {
        total += profile.count;
    }
    CHECK(total == 100);
    CHECK(simulate_population_mix(params) == simulate_continuous(config));
}

TEST_CASE("sybil experiment requires the relative rule") {
    BinaryTournamentConfig config;
    config.n_questions = 5;
    config.population = {BinaryProfile{Archetype::NoisySkilled, "attacker", 1, 0.5},
                         BinaryProfile{Archetype::NoisySkilled, "rivals", 5, 0.5}};
    config.replicas = 10;
    CHECK_THROWS_AS(sybil_experiment(config, 3), unsupported_combination_error);
}

TEST_CASE("rule and question-kind pairings are checked") {
    auto continuous = small_continuous_config();
    continuous.rule = ScoringRuleSpec::plain(RuleKind::Brier);
    CHECK_THROWS_AS(simulate_continuous(continuous), unsupported_combination_error);

    auto binary = appendix_binary_config(10);
    binary.rule = ScoringRuleSpec::plain(RuleKind::LogDensity);
    CHECK_THROWS_AS(simulate_binary(binary), unsupported_combination_error);
}

TEST_CASE("distortion sweep covers the grid and keeps cell replica counts") {
    auto config = small_continuous_config();
    config.replicas = 150;
    const std::vector<double> mean_grid{0.0};
    const std::vector<double> spread_grid{0.0, -8.0};
    const std::vector<int> n_grid{1, 2};
    const auto cells = sweep_distortion(config, mean_grid, spread_grid, n_grid);
    REQUIRE(cells.size() == 4);
    for (const auto& cell : cells) {
        CHECK(cell.replicas == 150);
        CHECK(cell.focal_topk_count <= cell.replicas);
    }
    // Cells are deterministic: rerunning reproduces the same counts.
    const auto again = sweep_distortion(config, mean_grid, spread_grid, n_grid);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(cells[i].focal_topk_count == again[i].focal_topk_count);
    }
}

TEST_CASE("top-k prizes split equally among the best, ties at random") {
    RandomStream stream(303);
    const std::vector<ScoredForecaster> scores{
        {"a", 0.10}, {"b", 0.20}, {"c", 0.20}, {"d", 0.90}};
    PrizeStructure prizes;
    prizes.kind = PrizeKind::TopK;
    prizes.k = 2;
    std::map<std::string, int> second_slot;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto payouts = allocate_prizes(scores, prizes, true, stream);
        CHECK(payouts[0].payout == doctest::Approx(0.5));  // "a" always wins a share
        CHECK(payouts[3].payout == 0.0);
        const bool b_won = payouts[1].payout > 0.0;
        const bool c_won = payouts[2].payout > 0.0;
        CHECK(b_won != c_won);  // exactly one of the tied pair
        ++second_slot[b_won ? "b" : "c"];
    }
    CHECK(std::fabs(second_slot["b"] - 1000.0) < 120.0);
}

TEST_CASE("constant-ticket lottery is uniform") {
    RandomStream stream(404);
    const std::vector<ScoredForecaster> scores{{"a", 0.1}, {"b", 0.4}, {"c", 0.2}, {"d", 0.3}, {"e", 0.5}};
    PrizeStructure lottery;
    lottery.kind = PrizeKind::Lottery;
    lottery.ticket_function = [](double) { return 1.0; };
    std::map<std::string, int> wins;
    const int trials = 10000;
    for (int trial = 0; trial < trials; ++trial) {
        for (const Payout& payout : allocate_prizes(scores, lottery, true, stream)) {
            if (payout.payout > 0.0) {
                ++wins[payout.id];
            }
        }
    }
    for (const auto& [id, count] : wins) {
        CHECK(std::fabs(count / static_cast<double>(trials) - 0.2) < 0.02);
    }
}

TEST_CASE("lottery wins are proportional to tickets") {
    RandomStream stream(505);
    const std::vector<ScoredForecaster> scores{{"a", 0.05}, {"b", 0.15}, {"c", 0.25}};
    PrizeStructure lottery;
    lottery.kind = PrizeKind::Lottery;
    lottery.ticket_function = [](double brier_score) { return std::max(0.0, 0.3 - brier_score); };
    // tickets: 0.25, 0.15, 0.05 -> shares 5/9, 3/9, 1/9
    std::map<std::string, int> wins;
    const int trials = 100000;
    for (int trial = 0; trial < trials; ++trial) {
        for (const Payout& payout : allocate_prizes(scores, lottery, true, stream)) {
            if (payout.payout > 0.0) {
                ++wins[payout.id];
            }
        }
    }
    CHECK(std::fabs(wins["a"] / static_cast<double>(trials) - 5.0 / 9.0) < 0.02);
    CHECK(std::fabs(wins["b"] / static_cast<double>(trials) - 3.0 / 9.0) < 0.02);
    CHECK(std::fabs(wins["c"] / static_cast<double>(trials) - 1.0 / 9.0) < 0.02);
}

TEST_CASE("degenerate lotteries are rejected") {
    RandomStream stream(606);
    const std::vector<ScoredForecaster> scores{{"a", 0.5}, {"b", 0.6}};
    PrizeStructure lottery;
    lottery.kind = PrizeKind::Lottery;
    lottery.ticket_function = [](double) { return 0.0; };
    CHECK_THROWS_AS(allocate_prizes(scores, lottery, true, stream), std::domain_error);
}
