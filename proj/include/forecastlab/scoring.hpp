// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "forecastlab/trajectory.hpp"

namespace forecastlab {

enum class RuleKind {
    Brier,
    RelativeBrier,
    TruncatedPwbs,
    ProperPwbs,
    LogDensity,
    Collaborative,
};

const char* rule_name(RuleKind kind);

struct CollaborativeWeights {
    double alpha;
    double beta;
    double gamma;
};

// A scoring rule plus its parameters. Collaborative is the only kind that
// carries parameters; construction enforces alpha > 0 and beta, gamma >= 0.
class ScoringRuleSpec {
  public:
    static ScoringRuleSpec plain(RuleKind kind);
    static ScoringRuleSpec collaborative(CollaborativeWeights weights);

    RuleKind kind() const { return kind_; }
    // Brier-family rules are lower-is-better; LogDensity is higher-is-better.
    bool lower_is_better() const { return kind_ != RuleKind::LogDensity; }
    // Throws std::logic_error unless kind() == Collaborative.
    const CollaborativeWeights& collaborative_weights() const;

  private:
    explicit ScoringRuleSpec(RuleKind kind) : kind_(kind) {}

    RuleKind kind_;
    CollaborativeWeights weights_{1.0, 0.0, 0.0};
};

struct ScoreRecord {
    std::string forecaster_id;
    std::string question_id;
    double value;
};

// Quadratic loss of a probability forecast: (1-p)^2 if the event happened,
// p^2 if not. Lower is better; always in [0, 1].
double brier(Probability p, bool outcome);

// Expected Brier score of reporting `report` when the event happens with
// probability `belief`: belief*(1-report)^2 + (1-belief)*report^2.
double expected_brier(Probability report, Probability belief);

// Own score minus the mean of the other forecasters' scores; negative means
// beating the crowd.
double relative_brier(double own, double others_mean);

// Time-integrated Brier normalized by the *actual* open period
// (close - open). Early resolution shrinks the denominator, which is what
// breaks properness.
double truncated_pwbs(const ForecastTrajectory& trajectory, const QuestionTimeline& timeline,
                      bool outcome);

// Same integral normalized by the *planned* open period
// (planned_close - open). Equals truncated_pwbs scaled by
// (close - open) / (planned_close - open).
double proper_pwbs(const ForecastTrajectory& trajectory, const QuestionTimeline& timeline,
                   bool outcome);

// Natural log of the forecast density at the resolution value; higher is
// better. density must be positive.
double log_density_score(double density);

// alpha*brier(forecaster) + beta*brier(aggregate) - gamma*brier(prior), lower
// is better. The value is meant to be paid out directly, never renormalized
// into a share of a fixed prize pool.
double collaborative_score(double brier_forecaster, double brier_aggregate, double brier_prior,
                           const ScoringRuleSpec& spec);

}  // namespace forecastlab
