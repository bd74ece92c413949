// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace forecastlab {

const char* rule_name(RuleKind kind) {
    switch (kind) {
        case RuleKind::Brier: return "brier";
        case RuleKind::RelativeBrier: return "relative_brier";
        case RuleKind::TruncatedPwbs: return "truncated_pwbs";
        case RuleKind::ProperPwbs: return "proper_pwbs";
        case RuleKind::LogDensity: return "log_density";
        case RuleKind::Collaborative: return "collaborative";
    }
    return "unknown";
}

ScoringRuleSpec ScoringRuleSpec::plain(RuleKind kind) {
    if (kind == RuleKind::Collaborative) {
        throw std::invalid_argument("Collaborative rule requires weights");
    }
    return ScoringRuleSpec(kind);
}

ScoringRuleSpec ScoringRuleSpec::collaborative(CollaborativeWeights weights) {
    if (!(weights.alpha > 0.0) || weights.beta < 0.0 || weights.gamma < 0.0) {
        throw std::invalid_argument("Collaborative weights require alpha > 0, beta,gamma >= 0");
    }
    ScoringRuleSpec spec(RuleKind::Collaborative);
    spec.weights_ = weights;
    return spec;
}

const CollaborativeWeights& ScoringRuleSpec::collaborative_weights() const {
    if (kind_ != RuleKind::Collaborative) {
        throw std::logic_error("not a collaborative rule");
    }
    return weights_;
}

double brier(Probability p, bool outcome) {
    const double v = p.value();
    return outcome ? (1.0 - v) * (1.0 - v) : v * v;
}

double expected_brier(Probability report, Probability belief) {
    const double r = report.value();
    const double q = belief.value();
    return q * (1.0 - r) * (1.0 - r) + (1.0 - q) * r * r;
}

double relative_brier(double own, double others_mean) {
    if (!std::isfinite(own) || !std::isfinite(others_mean)) {
        throw std::domain_error("relative_brier: non-finite input");
    }
    return own - others_mean;
}

double truncated_pwbs(const ForecastTrajectory& trajectory, const QuestionTimeline& timeline,
                      bool outcome) {
    return trajectory_time_average(
        trajectory, timeline, [outcome](Probability p) { return brier(p, outcome); },
        AveragingSpan::ActualClose);
}

double proper_pwbs(const ForecastTrajectory& trajectory, const QuestionTimeline& timeline,
                   bool outcome) {
    return trajectory_time_average(
        trajectory, timeline, [outcome](Probability p) { return brier(p, outcome); },
        AveragingSpan::PlannedClose);
}

double log_density_score(double density) {
    if (!(density > 0.0)) {
        throw std::domain_error("log_density_score: density must be positive");
    }
    return std::log(density);
}

double collaborative_score(double brier_forecaster, double brier_aggregate, double brier_prior,
                           const ScoringRuleSpec& spec) {
    const CollaborativeWeights& w = spec.collaborative_weights();
    return w.alpha * brier_forecaster + w.beta * brier_aggregate - w.gamma * brier_prior;
}

}  // namespace forecastlab
