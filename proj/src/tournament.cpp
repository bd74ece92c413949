// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/tournament.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "forecastlab/errors.hpp"
#include "forecastlab/prob.hpp"

namespace forecastlab {

namespace {

// Stream roles. Each (master_seed, role, replica[, entity]) tuple names an
// independent stream, so adding or removing participants never perturbs the
// draws of the others.
constexpr std::uint64_t kQuestionsRole = 1;
constexpr std::uint64_t kForecasterRole = 2;
constexpr std::uint64_t kTieBreakRole = 3;
constexpr std::uint64_t kDistortionRole = 4;
constexpr std::uint64_t kSweepCellRole = 5;

// Reports sharpened below this spread are clamped; mirrors the minimum slider
// width a platform would enforce.
constexpr double kMinReportedSpread = 0.1;

void pick_distinct(RandomStream& stream, int total, int picks, std::vector<int>& scratch,
                   std::vector<int>& out) {
    scratch.resize(static_cast<std::size_t>(total));
    std::iota(scratch.begin(), scratch.end(), 0);
    out.clear();
    for (int i = 0; i < picks; ++i) {
        const std::uint64_t j =
            static_cast<std::uint64_t>(i) + stream.below(static_cast<std::uint64_t>(total - i));
        std::swap(scratch[static_cast<std::size_t>(i)], scratch[j]);
        out.push_back(scratch[static_cast<std::size_t>(i)]);
    }
}

double blended_log_density(double x, const LogisticParams& report, const LogisticParams& house,
                           double prior_blend) {
    const double report_term = logistic_log_pdf(x, report);
    if (prior_blend <= 0.0) {
        return report_term;
    }
    const double a = std::log1p(-prior_blend) + report_term;
    const double b = std::log(prior_blend) + logistic_log_pdf(x, house);
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// Indices of the top-k individuals by score, ties broken uniformly at random
// with per-individual keys from the tie stream.
std::vector<int> rank_top_k(const std::vector<double>& scores, bool lower_is_better, int k,
                            RandomStream& tie_stream, std::vector<std::uint64_t>& tie_keys,
                            std::vector<int>& order) {
    const int n = static_cast<int>(scores.size());
    tie_keys.resize(scores.size());
    for (auto& key : tie_keys) {
        key = tie_stream.next_bits();
    }
    order.resize(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double sa = scores[static_cast<std::size_t>(a)];
        const double sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) {
            return lower_is_better ? sa < sb : sa > sb;
        }
        if (tie_keys[static_cast<std::size_t>(a)] != tie_keys[static_cast<std::size_t>(b)]) {
            return tie_keys[static_cast<std::size_t>(a)] < tie_keys[static_cast<std::size_t>(b)];
        }
        return a < b;
    });
    return std::vector<int>(order.begin(), order.begin() + std::min(k, n));
}

// ---------------------------------------------------------------------------
// Continuous engine
// ---------------------------------------------------------------------------

struct ContinuousReplicaResult {
    std::vector<std::uint32_t> profile_topk;
    std::vector<double> profile_score_sum;
    bool focal_topk = false;
    double focal_score = 0.0;
};

void validate_continuous(const ContinuousTournamentConfig& config) {
    if (config.rule.kind() != RuleKind::LogDensity) {
        throw unsupported_combination_error(
            "continuous tournaments support the log_density rule only");
    }
    if (config.n_questions < 1 || config.replicas < 1 || config.top_k < 1) {
        throw std::invalid_argument("continuous tournament: bad sizes");
    }
    if (!(config.prior_blend >= 0.0 && config.prior_blend < 1.0)) {
        throw std::invalid_argument("continuous tournament: prior_blend must be in [0, 1)");
    }
    int total = config.focal ? 1 : 0;
    for (const ContinuousProfile& profile : config.population) {
        if (profile.count < 1) {
            throw std::invalid_argument("continuous tournament: empty profile");
        }
        if (const auto* per_member = std::get_if<SpreadPerMember>(&profile.spread)) {
            if (per_member->values.empty()) {
                throw std::invalid_argument("SpreadPerMember: no values");
            }
        }
        if (const auto* split = std::get_if<SpreadSplit>(&profile.spread)) {
            if (split->n_alternate < 0 || split->n_alternate > config.n_questions) {
                throw std::invalid_argument("SpreadSplit: n_alternate out of range");
            }
        }
        total += profile.count;
    }
    if (total < 2) {
        throw std::invalid_argument("continuous tournament: population must have >= 2 members");
    }
    if (config.focal && config.focal->distortion) {
        const DistortionPolicy& d = *config.focal->distortion;
        if (d.n_questions_distorted < 0 || d.n_questions_distorted > config.n_questions) {
            throw std::invalid_argument("DistortionPolicy: n_questions_distorted out of range");
        }
    }
}

ContinuousReplicaResult run_continuous_replica(const ContinuousTournamentConfig& config,
                                               std::uint64_t master, std::uint64_t replica) {
    const int nq = config.n_questions;
    const std::size_t n_profiles = config.population.size();

    ContinuousReplicaResult result;
    result.profile_topk.assign(n_profiles, 0);
    result.profile_score_sum.assign(n_profiles, 0.0);

    // Questions.
    std::vector<LogisticParams> truth(static_cast<std::size_t>(nq));
    std::vector<double> resolution(static_cast<std::size_t>(nq));
    {
        RandomStream qstream(master, {kQuestionsRole, replica});
        for (int q = 0; q < nq; ++q) {
            if (const auto* generated = std::get_if<GeneratedSpreadQuestions>(&config.questions)) {
                const ContinuousQuestion question =
                    generate_question(qstream, generated->meta_location, generated->meta_spread);
                truth[static_cast<std::size_t>(q)] = question.truth;
                resolution[static_cast<std::size_t>(q)] = *question.resolution;
            } else {
                const auto& fixed = std::get<FixedQuestions>(config.questions);
                truth[static_cast<std::size_t>(q)] = {fixed.location, fixed.spread};
                resolution[static_cast<std::size_t>(q)] =
                    logistic_sample(qstream, truth[static_cast<std::size_t>(q)]);
            }
        }
    }

    const int total = (config.focal ? 1 : 0) +
                      std::accumulate(config.population.begin(), config.population.end(), 0,
                                      [](int acc, const ContinuousProfile& p) { return acc + p.count; });
    std::vector<double> scores;
    scores.reserve(static_cast<std::size_t>(total));
    std::vector<int> profile_of;  // -1 marks the focal forecaster
    profile_of.reserve(static_cast<std::size_t>(total));

    std::vector<int> scratch;
    std::vector<int> picks;
    const double w = config.prior_blend;

    // Focal forecaster: plays the truth, then applies any distortion to the
    // designated questions.
    if (config.focal) {
        std::vector<LogisticParams> report(truth);
        if (config.focal->distortion && config.focal->distortion->n_questions_distorted > 0) {
            const DistortionPolicy& d = *config.focal->distortion;
            RandomStream dstream(master, {kDistortionRole, replica});
            pick_distinct(dstream, nq, d.n_questions_distorted, scratch, picks);
            for (int q : picks) {
                auto& params = report[static_cast<std::size_t>(q)];
                params.location += d.delta_mean;
                params.spread = std::max(params.spread + d.delta_spread, kMinReportedSpread);
            }
        }
        double sum = 0.0;
        for (int q = 0; q < nq; ++q) {
            sum += blended_log_density(resolution[static_cast<std::size_t>(q)],
                                       report[static_cast<std::size_t>(q)],
                                       truth[static_cast<std::size_t>(q)], w);
        }
        scores.push_back(sum / nq);
        profile_of.push_back(-1);
    }

    std::uint64_t uid = 1;  // focal owns uid 0 whether present or not
    for (std::size_t g = 0; g < n_profiles; ++g) {
        const ContinuousProfile& profile = config.population[g];
        for (int member = 0; member < profile.count; ++member, ++uid) {
            RandomStream fstream(master, {kForecasterRole, replica, uid});

            // Spread designation first so the per-question draw order below is
            // independent of the model.
            const int* alt_set = nullptr;
            int alt_count = 0;
            if (const auto* split = std::get_if<SpreadSplit>(&profile.spread)) {
                pick_distinct(fstream, nq, split->n_alternate, scratch, picks);
                std::sort(picks.begin(), picks.end());
                alt_set = picks.data();
                alt_count = static_cast<int>(picks.size());
            }

            double sum = 0.0;
            for (int q = 0; q < nq; ++q) {
                const LogisticParams& house = truth[static_cast<std::size_t>(q)];
                double guessed_location = house.location;
                if (const auto* logistic = std::get_if<MeanErrorLogistic>(&profile.mean)) {
                    guessed_location += logistic_sample(fstream, {logistic->location, logistic->spread});
                } else if (const auto* uniform = std::get_if<MeanErrorUniform>(&profile.mean)) {
                    guessed_location += fstream.uniform(uniform->lo, uniform->hi);
                }

                double guessed_spread = house.spread;
                if (const auto* err = std::get_if<SpreadErrorLogistic>(&profile.spread)) {
                    do {
                        guessed_spread =
                            house.spread + logistic_sample(fstream, {err->location, err->spread});
                    } while (guessed_spread <= 0.0);
                } else if (const auto* fixed = std::get_if<SpreadFixed>(&profile.spread)) {
                    guessed_spread = fixed->value;
                } else if (const auto* per_member = std::get_if<SpreadPerMember>(&profile.spread)) {
                    guessed_spread = per_member->values[static_cast<std::size_t>(member) %
                                                        per_member->values.size()];
                } else if (const auto* split = std::get_if<SpreadSplit>(&profile.spread)) {
                    guessed_spread = std::binary_search(alt_set, alt_set + alt_count, q)
                                         ? split->alternate
                                         : split->base;
                }

                sum += blended_log_density(resolution[static_cast<std::size_t>(q)],
                                           {guessed_location, guessed_spread}, house, w);
            }
            scores.push_back(sum / nq);
            profile_of.push_back(static_cast<int>(g));
        }
    }

    // Rank and tally.
    RandomStream tie_stream(master, {kTieBreakRole, replica});
    std::vector<std::uint64_t> tie_keys;
    std::vector<int> order;
    const std::vector<int> winners =
        rank_top_k(scores, config.rule.lower_is_better(), config.top_k, tie_stream, tie_keys, order);
    for (int idx : winners) {
        const int g = profile_of[static_cast<std::size_t>(idx)];
        if (g < 0) {
            result.focal_topk = true;
        } else {
            ++result.profile_topk[static_cast<std::size_t>(g)];
        }
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const int g = profile_of[i];
        if (g < 0) {
            result.focal_score = scores[i];
        } else {
            result.profile_score_sum[static_cast<std::size_t>(g)] += scores[i];
        }
    }
    return result;
}

SimulationSummary reduce_continuous(const ContinuousTournamentConfig& config,
                                    const std::vector<ContinuousReplicaResult>& slots) {
    SimulationSummary summary;
    summary.replica_count = config.replicas;
    summary.top_k = config.top_k;
    summary.has_focal = config.focal.has_value();
    for (const ContinuousProfile& profile : config.population) {
        summary.profiles.push_back(ProfileStats{profile.label, profile.count, 0, 0.0});
    }
    if (config.record_replicas) {
        summary.per_replica_focal_score.reserve(slots.size());
    }
    for (const ContinuousReplicaResult& slot : slots) {
        for (std::size_t g = 0; g < summary.profiles.size(); ++g) {
            summary.profiles[g].topk_count += slot.profile_topk[g];
            summary.profiles[g].score_sum += slot.profile_score_sum[g];
        }
        if (summary.has_focal) {
            summary.focal_topk_count += slot.focal_topk ? 1 : 0;
            summary.focal_score_sum += slot.focal_score;
            if (config.record_replicas) {
                summary.per_replica_focal_score.push_back(slot.focal_score);
            }
        }
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Binary engine
// ---------------------------------------------------------------------------

struct BinaryReplicaResult {
    std::vector<std::uint32_t> profile_topk;
    std::vector<double> profile_score_sum;
    bool focal_topk = false;
    double focal_score = 0.0;
    double focal_brier = 0.0;
    bool honest_best = false;
};

void validate_binary(const BinaryTournamentConfig& config) {
    if (config.rule.kind() != RuleKind::Brier && config.rule.kind() != RuleKind::RelativeBrier) {
        throw unsupported_combination_error(
            "binary tournaments support the brier and relative_brier rules only");
    }
    if (config.n_questions < 1 || config.replicas < 1 || config.top_k < 1) {
        throw std::invalid_argument("binary tournament: bad sizes");
    }
    if (!(config.prob_lo > 0.0 && config.prob_lo <= config.prob_hi && config.prob_hi < 1.0)) {
        throw std::invalid_argument("binary tournament: probability bounds must satisfy 0 < lo <= hi < 1");
    }
    int total = 0;
    int non_copiers = 0;
    for (const BinaryProfile& profile : config.population) {
        if (profile.count < 1) {
            throw std::invalid_argument("binary tournament: empty profile");
        }
        total += profile.count;
        if (profile.archetype != Archetype::CommunityCopier) {
            non_copiers += profile.count;
        }
    }
    if (total < 2) {
        throw std::invalid_argument("binary tournament: population must have >= 2 members");
    }
    if (non_copiers == 0) {
        throw std::invalid_argument("binary tournament: community copiers need someone to copy");
    }
    if (config.focal_individual >= total) {
        throw std::invalid_argument("binary tournament: focal index out of range");
    }
}

BinaryReplicaResult run_binary_replica(const BinaryTournamentConfig& config, std::uint64_t master,
                                       std::uint64_t replica) {
    const int nq = config.n_questions;
    const std::size_t n_profiles = config.population.size();
    const int total = std::accumulate(config.population.begin(), config.population.end(), 0,
                                      [](int acc, const BinaryProfile& p) { return acc + p.count; });

    BinaryReplicaResult result;
    result.profile_topk.assign(n_profiles, 0);
    result.profile_score_sum.assign(n_profiles, 0.0);

    std::vector<double> true_prob(static_cast<std::size_t>(nq));
    std::vector<bool> outcome(static_cast<std::size_t>(nq));
    {
        RandomStream qstream(master, {kQuestionsRole, replica});
        for (int q = 0; q < nq; ++q) {
            true_prob[static_cast<std::size_t>(q)] = qstream.uniform(config.prob_lo, config.prob_hi);
            outcome[static_cast<std::size_t>(q)] =
                qstream.bernoulli(true_prob[static_cast<std::size_t>(q)]);
        }
    }

    std::vector<double> reports(static_cast<std::size_t>(total) * static_cast<std::size_t>(nq));
    std::vector<int> profile_of(static_cast<std::size_t>(total));
    auto report_at = [&](int individual, int q) -> double& {
        return reports[static_cast<std::size_t>(individual) * static_cast<std::size_t>(nq) +
                       static_cast<std::size_t>(q)];
    };

    // First pass: everyone except community copiers.
    int individual = 0;
    std::uint64_t uid = 0;
    for (std::size_t g = 0; g < n_profiles; ++g) {
        const BinaryProfile& profile = config.population[g];
        for (int member = 0; member < profile.count; ++member, ++individual, ++uid) {
            profile_of[static_cast<std::size_t>(individual)] = static_cast<int>(g);
            if (profile.archetype == Archetype::CommunityCopier) {
                continue;
            }
            RandomStream fstream(master, {kForecasterRole, replica, uid});
            for (int q = 0; q < nq; ++q) {
                const Probability truth(true_prob[static_cast<std::size_t>(q)]);
                double r;
                switch (profile.archetype) {
                    case Archetype::SybilPuppet:
                        r = logodds_shift(truth, truth.value() >= 0.5 ? -profile.sybil_bits
                                                                      : profile.sybil_bits)
                                .value();
                        break;
                    default:
                        r = logodds_shift(truth,
                                          fstream.uniform(-profile.noise_bits, profile.noise_bits))
                                .value();
                        break;
                }
                if (profile.archetype == Archetype::UnsophisticatedExtremizer && r != 0.5) {
                    r = logodds_shift(Probability(r),
                                      r > 0.5 ? profile.extremize_bits : -profile.extremize_bits)
                            .value();
                }
                report_at(individual, q) = r;
            }
            if (profile.archetype == Archetype::SophisticatedExtremizer) {
                int closest = 0;
                double best = 2.0;
                for (int q = 0; q < nq; ++q) {
                    const double d = std::fabs(report_at(individual, q) - 0.5);
                    if (d < best) {
                        best = d;
                        closest = q;
                    }
                }
                report_at(individual, closest) = fstream.bernoulli(0.5) ? 1.0 : 0.0;
            }
        }
    }

    // Second pass: copiers report the mean of the non-copier forecasts.
    std::vector<double> copier_target;
    bool have_target = false;
    individual = 0;
    for (std::size_t g = 0; g < n_profiles; ++g) {
        const BinaryProfile& profile = config.population[g];
        for (int member = 0; member < profile.count; ++member, ++individual) {
            if (profile.archetype != Archetype::CommunityCopier) {
                continue;
            }
            if (!have_target) {
                copier_target.assign(static_cast<std::size_t>(nq), 0.0);
                int sources = 0;
                int other = 0;
                for (std::size_t gg = 0; gg < n_profiles; ++gg) {
                    for (int mm = 0; mm < config.population[gg].count; ++mm, ++other) {
                        if (config.population[gg].archetype == Archetype::CommunityCopier) {
                            continue;
                        }
                        ++sources;
                        for (int q = 0; q < nq; ++q) {
                            copier_target[static_cast<std::size_t>(q)] += report_at(other, q);
                        }
                    }
                }
                for (double& v : copier_target) {
                    v /= sources;
                }
                have_target = true;
            }
            for (int q = 0; q < nq; ++q) {
                report_at(individual, q) = copier_target[static_cast<std::size_t>(q)];
            }
        }
    }

    // Brier matrix and per-question sums.
    std::vector<double> brier_mean(static_cast<std::size_t>(total), 0.0);
    std::vector<double> question_brier_sum(static_cast<std::size_t>(nq), 0.0);
    std::vector<double> question_report_sum(static_cast<std::size_t>(nq), 0.0);
    std::vector<double> brier_matrix(reports.size());
    for (int i = 0; i < total; ++i) {
        for (int q = 0; q < nq; ++q) {
            const double b = brier(Probability(report_at(i, q)), outcome[static_cast<std::size_t>(q)]);
            brier_matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(nq) +
                         static_cast<std::size_t>(q)] = b;
            brier_mean[static_cast<std::size_t>(i)] += b;
            question_brier_sum[static_cast<std::size_t>(q)] += b;
            question_report_sum[static_cast<std::size_t>(q)] += report_at(i, q);
        }
        brier_mean[static_cast<std::size_t>(i)] /= nq;
    }

    std::vector<double> scores(static_cast<std::size_t>(total));
    if (config.rule.kind() == RuleKind::Brier) {
        scores = brier_mean;
    } else {
        for (int i = 0; i < total; ++i) {
            double sum = 0.0;
            for (int q = 0; q < nq; ++q) {
                const double own =
                    brier_matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(nq) +
                                 static_cast<std::size_t>(q)];
                double baseline;
                if (config.relative_baseline == RelativeBaseline::MeanOfOthers) {
                    baseline = (question_brier_sum[static_cast<std::size_t>(q)] - own) /
                               static_cast<double>(total - 1);
                } else {
                    const double others_mean =
                        (question_report_sum[static_cast<std::size_t>(q)] - report_at(i, q)) /
                        static_cast<double>(total - 1);
                    baseline = brier(Probability(others_mean), outcome[static_cast<std::size_t>(q)]);
                }
                sum += relative_brier(own, baseline);
            }
            scores[static_cast<std::size_t>(i)] = sum / nq;
        }
    }

    RandomStream tie_stream(master, {kTieBreakRole, replica});
    std::vector<std::uint64_t> tie_keys;
    std::vector<int> order;
    const std::vector<int> winners =
        rank_top_k(scores, config.rule.lower_is_better(), config.top_k, tie_stream, tie_keys, order);
    for (int idx : winners) {
        ++result.profile_topk[static_cast<std::size_t>(profile_of[static_cast<std::size_t>(idx)])];
        if (idx == config.focal_individual) {
            result.focal_topk = true;
        }
    }
    result.honest_best =
        config.population[static_cast<std::size_t>(profile_of[static_cast<std::size_t>(order.front())])]
            .archetype == Archetype::NoisySkilled;
    for (int i = 0; i < total; ++i) {
        result.profile_score_sum[static_cast<std::size_t>(profile_of[static_cast<std::size_t>(i)])] +=
            scores[static_cast<std::size_t>(i)];
    }
    if (config.focal_individual >= 0) {
        result.focal_score = scores[static_cast<std::size_t>(config.focal_individual)];
        result.focal_brier = brier_mean[static_cast<std::size_t>(config.focal_individual)];
    }
    return result;
}

SimulationSummary reduce_binary(const BinaryTournamentConfig& config,
                                const std::vector<BinaryReplicaResult>& slots) {
    SimulationSummary summary;
    summary.replica_count = config.replicas;
    summary.top_k = config.top_k;
    summary.has_focal = config.focal_individual >= 0;
    for (const BinaryProfile& profile : config.population) {
        summary.profiles.push_back(ProfileStats{profile.label, profile.count, 0, 0.0});
    }
    if (config.record_replicas) {
        summary.per_replica_focal_score.reserve(slots.size());
    }
    for (const BinaryReplicaResult& slot : slots) {
        for (std::size_t g = 0; g < summary.profiles.size(); ++g) {
            summary.profiles[g].topk_count += slot.profile_topk[g];
            summary.profiles[g].score_sum += slot.profile_score_sum[g];
        }
        summary.honest_best_count += slot.honest_best ? 1 : 0;
        if (summary.has_focal) {
            summary.focal_topk_count += slot.focal_topk ? 1 : 0;
            summary.focal_score_sum += slot.focal_score;
            summary.focal_brier_sum += slot.focal_brier;
            if (config.record_replicas) {
                summary.per_replica_focal_score.push_back(slot.focal_score);
            }
        }
    }
    return summary;
}

template <typename Result, typename Kernel>
std::vector<Result> run_replicas(std::uint64_t replicas, ExecMode mode, const Kernel& kernel) {
    std::vector<Result> slots(replicas);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(replicas);
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t r = 0; r < n; ++r) {
            slots[static_cast<std::size_t>(r)] = kernel(static_cast<std::uint64_t>(r));
        }
    } else {
        for (std::ptrdiff_t r = 0; r < n; ++r) {
            slots[static_cast<std::size_t>(r)] = kernel(static_cast<std::uint64_t>(r));
        }
    }
    return slots;
}

}  // namespace

const char* archetype_name(Archetype a) {
    switch (a) {
        case Archetype::Perfect: return "perfect";
        case Archetype::NoisySkilled: return "noisy_skilled";
        case Archetype::UnsophisticatedExtremizer: return "unsophisticated_extremizer";
        case Archetype::SophisticatedExtremizer: return "sophisticated_extremizer";
        case Archetype::Unskilled: return "unskilled";
        case Archetype::CommunityCopier: return "community_copier";
        case Archetype::SybilPuppet: return "sybil_puppet";
    }
    return "unknown";
}

double SimulationSummary::topk_frequency(std::size_t profile) const {
    const ProfileStats& stats = profiles.at(profile);
    return static_cast<double>(stats.topk_count) /
           (static_cast<double>(stats.members) * static_cast<double>(replica_count));
}

double SimulationSummary::mean_score(std::size_t profile) const {
    const ProfileStats& stats = profiles.at(profile);
    return stats.score_sum / (static_cast<double>(stats.members) * static_cast<double>(replica_count));
}

double SimulationSummary::focal_topk_frequency() const {
    return static_cast<double>(focal_topk_count) / static_cast<double>(replica_count);
}

double SimulationSummary::focal_mean_score() const {
    return focal_score_sum / static_cast<double>(replica_count);
}

SimulationSummary simulate_continuous(const ContinuousTournamentConfig& config, ExecMode mode) {
    validate_continuous(config);
    const auto slots = run_replicas<ContinuousReplicaResult>(
        config.replicas, mode,
        [&](std::uint64_t r) { return run_continuous_replica(config, config.master_seed, r); });
    return reduce_continuous(config, slots);
}

SimulationSummary simulate_binary(const BinaryTournamentConfig& config, ExecMode mode) {
    validate_binary(config);
    const auto slots = run_replicas<BinaryReplicaResult>(
        config.replicas, mode,
        [&](std::uint64_t r) { return run_binary_replica(config, config.master_seed, r); });
    return reduce_binary(config, slots);
}

ContinuousTournamentConfig population_mix_config(const PopulationMixParams& params) {
    const double u = params.spread_unit;
    ContinuousTournamentConfig config;
    config.n_questions = params.n_questions;
    config.questions = FixedQuestions{params.question_location, params.question_spread * u};
    config.focal = ContinuousFocal{"perfect", std::nullopt};
    config.population = {
        ContinuousProfile{Archetype::NoisySkilled, "skilled_varied_sd", 10,
                          MeanErrorUniform{-5.0, 5.0},
                          SpreadPerMember{{4 * u, 6 * u, 8 * u, 10 * u, 12 * u, 14 * u, 16 * u,
                                           18 * u, 20 * u, 22 * u}}},
        ContinuousProfile{Archetype::SophisticatedExtremizer, "skilled_extremizer", 10,
                          MeanErrorUniform{-5.0, 5.0}, SpreadSplit{10 * u, 5 * u, 5}},
        ContinuousProfile{Archetype::Unskilled, "unskilled", 20, MeanErrorUniform{-15.0, 15.0},
                          SpreadFixed{10 * u}},
        ContinuousProfile{Archetype::Unskilled, "unskilled_overconfident", 20,
                          MeanErrorUniform{-15.0, 15.0}, SpreadFixed{5 * u}},
        ContinuousProfile{Archetype::Unskilled, "unskilled_underconfident", 39,
                          MeanErrorUniform{-15.0, 15.0}, SpreadFixed{20 * u}},
    };
    config.prior_blend = params.prior_blend;
    config.top_k = params.top_k;
    config.replicas = params.replicas;
    config.master_seed = params.master_seed;
    return config;
}

SimulationSummary simulate_population_mix(const PopulationMixParams& params, ExecMode mode) {
    return simulate_continuous(population_mix_config(params), mode);
}

double DistortionCell::focal_topk_frequency() const {
    return static_cast<double>(focal_topk_count) / static_cast<double>(replicas);
}

std::vector<DistortionCell> sweep_distortion(const ContinuousTournamentConfig& config,
                                             std::span<const double> mean_grid,
                                             std::span<const double> spread_grid,
                                             std::span<const int> n_distorted_grid, ExecMode mode) {
    if (mean_grid.empty() || spread_grid.empty() || n_distorted_grid.empty()) {
        throw std::invalid_argument("sweep_distortion: grids must be nonempty");
    }
    if (!config.focal) {
        throw std::invalid_argument("sweep_distortion: config needs a focal forecaster");
    }
    std::vector<DistortionCell> cells;
    std::uint64_t cell_index = 0;
    for (int n_distorted : n_distorted_grid) {
        for (double delta_mean : mean_grid) {
            for (double delta_spread : spread_grid) {
                ContinuousTournamentConfig cell_config = config;
                cell_config.focal->distortion =
                    DistortionPolicy{delta_mean, delta_spread, n_distorted};
                cell_config.master_seed =
                    derive_seed(config.master_seed, {kSweepCellRole, cell_index});
                const SimulationSummary summary = simulate_continuous(cell_config, mode);
                cells.push_back(DistortionCell{delta_mean, delta_spread, n_distorted,
                                               summary.focal_topk_count, summary.replica_count});
                ++cell_index;
            }
        }
    }
    return cells;
}

double QuestionCountPoint::honest_best_frequency() const {
    return static_cast<double>(honest_best_count) / static_cast<double>(replicas);
}

std::vector<QuestionCountPoint> sweep_question_count(const BinaryTournamentConfig& config,
                                                     std::span<const int> n_grid, ExecMode mode) {
    if (n_grid.empty()) {
        throw std::invalid_argument("sweep_question_count: grid must be nonempty");
    }
    std::vector<QuestionCountPoint> points;
    std::uint64_t cell_index = 0;
    for (int n : n_grid) {
        BinaryTournamentConfig cell_config = config;
        cell_config.n_questions = n;
        cell_config.master_seed = derive_seed(config.master_seed, {kSweepCellRole, cell_index});
        const SimulationSummary summary = simulate_binary(cell_config, mode);
        points.push_back(QuestionCountPoint{n, summary.honest_best_count, summary.replica_count});
        ++cell_index;
    }
    return points;
}

SybilOutcome sybil_experiment(const BinaryTournamentConfig& config, int n_puppets, ExecMode mode) {
    if (config.rule.kind() != RuleKind::RelativeBrier) {
        throw unsupported_combination_error("sybil_experiment requires the relative_brier rule");
    }
    if (n_puppets < 0) {
        throw std::invalid_argument("sybil_experiment: n_puppets must be nonnegative");
    }
    if (config.population.empty() || config.population.front().count < 1) {
        throw std::invalid_argument("sybil_experiment: attacker must be population[0]");
    }

    BinaryTournamentConfig base = config;
    base.focal_individual = 0;
    base.record_replicas = true;

    BinaryTournamentConfig with_puppets = base;
    if (n_puppets > 0) {
        with_puppets.population.push_back(
            BinaryProfile{Archetype::SybilPuppet, "sybil_puppet", n_puppets});
    }

    const SimulationSummary arm_without = simulate_binary(base, mode);
    const SimulationSummary arm_with = simulate_binary(with_puppets, mode);

    SybilOutcome outcome;
    outcome.attacker_relative_without = arm_without.focal_mean_score();
    outcome.attacker_relative_with = arm_with.focal_mean_score();
    outcome.attacker_brier_without =
        arm_without.focal_brier_sum / static_cast<double>(arm_without.replica_count);
    outcome.attacker_brier_with =
        arm_with.focal_brier_sum / static_cast<double>(arm_with.replica_count);
    outcome.paired_diffs.resize(arm_without.per_replica_focal_score.size());
    for (std::size_t r = 0; r < outcome.paired_diffs.size(); ++r) {
        outcome.paired_diffs[r] =
            arm_with.per_replica_focal_score[r] - arm_without.per_replica_focal_score[r];
    }
    return outcome;
}

std::vector<Payout> allocate_prizes(std::span<const ScoredForecaster> scores,
                                    const PrizeStructure& prizes, bool lower_is_better,
                                    RandomStream& stream) {
    if (scores.empty()) {
        throw std::invalid_argument("allocate_prizes: no forecasters");
    }
    std::vector<Payout> payouts;
    payouts.reserve(scores.size());
    for (const ScoredForecaster& entry : scores) {
        payouts.push_back(Payout{entry.id, 0.0});
    }

    if (prizes.kind == PrizeKind::TopK) {
        if (prizes.k < 1) {
            throw std::invalid_argument("allocate_prizes: k must be >= 1");
        }
        std::vector<double> values(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) {
            values[i] = scores[i].score;
        }
        std::vector<std::uint64_t> tie_keys;
        std::vector<int> order;
        const std::vector<int> winners =
            rank_top_k(values, lower_is_better, prizes.k, stream, tie_keys, order);
        const double share = 1.0 / static_cast<double>(winners.size());
        for (int idx : winners) {
            payouts[static_cast<std::size_t>(idx)].payout = share;
        }
        return payouts;
    }

    if (!prizes.ticket_function) {
        throw std::invalid_argument("allocate_prizes: lottery needs a ticket function");
    }
    std::vector<double> tickets(scores.size());
    double total = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        tickets[i] = prizes.ticket_function(scores[i].score);
        if (tickets[i] < 0.0 || !std::isfinite(tickets[i])) {
            throw std::domain_error("allocate_prizes: ticket counts must be finite and nonnegative");
        }
        total += tickets[i];
    }
    if (total <= 0.0) {
        throw std::domain_error("allocate_prizes: degenerate lottery, all ticket counts are zero");
    }
    const double draw = stream.unit_open() * total;
    double cumulative = 0.0;
    std::size_t winner = scores.size() - 1;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        cumulative += tickets[i];
        if (draw < cumulative) {
            winner = i;
            break;
        }
    }
    payouts[winner].payout = 1.0;
    return payouts;
}

}  // namespace forecastlab
