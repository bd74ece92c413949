// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "forecastlab/exec.hpp"
#include "forecastlab/incentive.hpp"
#include "forecastlab/scoring.hpp"

namespace forecastlab {

enum class Archetype {
    Perfect,
    NoisySkilled,
    UnsophisticatedExtremizer,
    SophisticatedExtremizer,
    Unskilled,
    CommunityCopier,
    SybilPuppet,
};

const char* archetype_name(Archetype a);

// ---------------------------------------------------------------------------
// Continuous tournaments
// ---------------------------------------------------------------------------

// How a forecaster's guessed location relates to the question's true location.
struct MeanExact {};
struct MeanErrorLogistic {
    double location;
    double spread;
};
struct MeanErrorUniform {
    double lo;
    double hi;
};
using MeanModel = std::variant<MeanExact, MeanErrorLogistic, MeanErrorUniform>;

// How a forecaster's guessed spread relates to the question's true spread.
struct SpreadExact {};
// Additive logistic error, re-drawn until the guess is positive.
struct SpreadErrorLogistic {
    double location;
    double spread;
};
struct SpreadFixed {
    double value;
};
// Member i of the group reports values[i % values.size()] on every question.
struct SpreadPerMember {
    std::vector<double> values;
};
// `alternate` on n_alternate questions chosen uniformly per replica and
// member, `base` on the rest.
struct SpreadSplit {
    double base;
    double alternate;
    int n_alternate;
};
using SpreadModel =
    std::variant<SpreadExact, SpreadErrorLogistic, SpreadFixed, SpreadPerMember, SpreadSplit>;

struct ContinuousProfile {
    Archetype archetype;
    std::string label;
    int count;
    MeanModel mean;
    SpreadModel spread;
};

// Reporting deltas the focal forecaster applies to n randomly designated
// questions per replica. delta_spread may be negative (sharpening) as long as
// the distorted spread stays positive.
struct DistortionPolicy {
    double delta_mean = 0.0;
    double delta_spread = 0.0;
    int n_questions_distorted = 0;
};

struct ContinuousFocal {
    std::string label = "focal";
    std::optional<DistortionPolicy> distortion;
};

// Questions drawn per the spread-meta recipe: location 0, spread itself a
// logistic draw (re-drawn until positive).
struct GeneratedSpreadQuestions {
    double meta_location;
    double meta_spread;
};
// Every question uses the same fixed distribution.
struct FixedQuestions {
    double location;
    double spread;
};
using QuestionModel = std::variant<GeneratedSpreadQuestions, FixedQuestions>;

struct ContinuousTournamentConfig {
    int n_questions;
    QuestionModel questions;
    std::optional<ContinuousFocal> focal;  // always plays the truth, plus distortion
    std::vector<ContinuousProfile> population;
    ScoringRuleSpec rule = ScoringRuleSpec::plain(RuleKind::LogDensity);
    // Platform floor: each report is scored as
    //   ln((1-w) * report_pdf(x) + w * question_pdf(x)).
    // 0 scores the raw report density. Bounds how much a bad report can lose,
    // which is what makes variance-seeking play viable at all.
    double prior_blend = 0.0;
    int top_k = 3;
    std::uint64_t replicas = 1;
    std::uint64_t master_seed = 0;
    bool record_replicas = false;  // keep per-replica focal/lead digests
};

// ---------------------------------------------------------------------------
// Binary tournaments
// ---------------------------------------------------------------------------

struct BinaryProfile {
    Archetype archetype;
    std::string label;
    int count;
    // Reports start from the true probability shifted by U(-bits, +bits) in
    // log-odds space (ignored by CommunityCopier and SybilPuppet).
    double noise_bits = 0.0;
    // UnsophisticatedExtremizer: extra shift away from 1/2, in bits.
    double extremize_bits = 0.0;
    // SybilPuppet: shift applied against the truth, in bits.
    double sybil_bits = 6.0;
};

enum class RelativeBaseline {
    MeanOfOthers,    // own Brier minus the mean of the others' Briers
    AggregateBrier,  // own Brier minus the Brier of the others' mean forecast
};

struct BinaryTournamentConfig {
    int n_questions;
    // True probabilities are drawn uniformly from [prob_lo, prob_hi].
    double prob_lo = 0.01;
    double prob_hi = 0.99;
    std::vector<BinaryProfile> population;
    ScoringRuleSpec rule = ScoringRuleSpec::plain(RuleKind::Brier);
    RelativeBaseline relative_baseline = RelativeBaseline::MeanOfOthers;
    int top_k = 5;
    std::uint64_t replicas = 1;
    std::uint64_t master_seed = 0;
    // Individual (global index across the population, in population order)
    // whose stats are reported as the focal forecaster; -1 for none.
    int focal_individual = -1;
    bool record_replicas = false;
};

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

struct ProfileStats {
    std::string label;
    int members = 0;
    std::uint64_t topk_count = 0;  // member-slots in the top k, summed over replicas
    double score_sum = 0.0;        // sum of member scores over replicas

    friend bool operator==(const ProfileStats&, const ProfileStats&) = default;
};

struct SimulationSummary {
    std::vector<ProfileStats> profiles;
    std::uint64_t replica_count = 0;
    int top_k = 0;
    std::uint64_t focal_topk_count = 0;
    double focal_score_sum = 0.0;
    // Binary engine only: the focal forecaster's absolute Brier, regardless of
    // the rule used for ranking.
    double focal_brier_sum = 0.0;
    bool has_focal = false;
    // Binary engine only: replicas where the single best-ranked individual
    // belongs to a NoisySkilled profile.
    std::uint64_t honest_best_count = 0;
    std::vector<double> per_replica_focal_score;  // only if record_replicas

    // Per-member frequency of placing in the top k.
    double topk_frequency(std::size_t profile) const;
    double mean_score(std::size_t profile) const;
    double focal_topk_frequency() const;
    double focal_mean_score() const;

    friend bool operator==(const SimulationSummary&, const SimulationSummary&) = default;
};

// ---------------------------------------------------------------------------
// Engines. Deterministic given the config (including master_seed) and
// independent of ExecMode: replica r always draws from streams derived from
// (master_seed, r), and results are reduced in replica order.
// ---------------------------------------------------------------------------

SimulationSummary simulate_continuous(const ContinuousTournamentConfig& config,
                                      ExecMode mode = ExecMode::Parallel);

SimulationSummary simulate_binary(const BinaryTournamentConfig& config,
                                  ExecMode mode = ExecMode::Parallel);

// The six-group reference population: a perfect focal predictor, ten skilled
// forecasters with per-member spreads 4..22, ten skilled forecasters who
// sharpen five random questions to half the true spread, and three unskilled
// groups (calibrated, overconfident, underconfident). All questions share one
// fixed distribution. spread_unit rescales every spread-like value (set it to
// sqrt(3)/pi to read the spreads as true standard deviations).
struct PopulationMixParams {
    int n_questions = 30;
    double question_location = 50.0;
    double question_spread = 10.0;
    double prior_blend = 0.26;
    double spread_unit = 1.0;
    int top_k = 5;
    std::uint64_t replicas = 20000;
    std::uint64_t master_seed = 0;
};

ContinuousTournamentConfig population_mix_config(const PopulationMixParams& params);

SimulationSummary simulate_population_mix(const PopulationMixParams& params,
                                          ExecMode mode = ExecMode::Parallel);

struct DistortionCell {
    double delta_mean;
    double delta_spread;
    int n_distorted;
    std::uint64_t focal_topk_count;
    std::uint64_t replicas;
    double focal_topk_frequency() const;
};

// Runs the focal-distortion grid. Each cell reruns the tournament with its
// own replica streams, derived from (master_seed, cell index).
std::vector<DistortionCell> sweep_distortion(const ContinuousTournamentConfig& config,
                                             std::span<const double> mean_grid,
                                             std::span<const double> spread_grid,
                                             std::span<const int> n_distorted_grid,
                                             ExecMode mode = ExecMode::Parallel);

struct QuestionCountPoint {
    int n_questions;
    std::uint64_t honest_best_count;  // replicas where a NoisySkilled member ranked first
    std::uint64_t replicas;
    double honest_best_frequency() const;
};

std::vector<QuestionCountPoint> sweep_question_count(const BinaryTournamentConfig& config,
                                                     std::span<const int> n_grid,
                                                     ExecMode mode = ExecMode::Parallel);

struct SybilOutcome {
    double attacker_relative_without = 0.0;  // mean relative Brier, no puppets
    double attacker_relative_with = 0.0;     // mean relative Brier, puppets added
    double attacker_brier_without = 0.0;
    double attacker_brier_with = 0.0;
    // Per-replica paired differences (with - without) of the relative score.
    std::vector<double> paired_diffs;
};

// Paired-arm experiment: the attacker is population[0] member 0 and must use
// RelativeBrier scoring. Question and forecaster streams are shared across
// arms, so adding puppets changes nobody else's draws.
SybilOutcome sybil_experiment(const BinaryTournamentConfig& config, int n_puppets,
                              ExecMode mode = ExecMode::Parallel);

// ---------------------------------------------------------------------------
// Prizes
// ---------------------------------------------------------------------------

enum class PrizeKind { TopK, Lottery };

struct PrizeStructure {
    PrizeKind kind = PrizeKind::TopK;
    int k = 1;
    // Lottery only: monotone nonnegative map from score to ticket count.
    std::function<double(double)> ticket_function;
};

struct ScoredForecaster {
    std::string id;
    double score;
};

struct Payout {
    std::string id;
    double payout;
};

// TopK: a unit prize split equally among the k best (ties broken uniformly at
// random from the stream). Lottery: a single winner drawn with probability
// proportional to ticket_function(score); throws std::domain_error when every
// ticket count is zero.
std::vector<Payout> allocate_prizes(std::span<const ScoredForecaster> scores,
                                    const PrizeStructure& prizes, bool lower_is_better,
                                    RandomStream& stream);

}  // namespace forecastlab
