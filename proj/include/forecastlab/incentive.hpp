// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "forecastlab/exec.hpp"
#include "forecastlab/scoring.hpp"

namespace forecastlab {

struct ProbabilityRange {
    Probability low;
    Probability high;
    bool empty() const { return low.value() >= high.value(); }
};

// For a forecaster whose running Brier score is p*(1-p), predicting honestly
// on any question with true probability strictly inside (p, 1-p) worsens the
// expected score. current_score must be in [0, 0.25].
ProbabilityRange skip_range_brier(double current_score);

// For a forecaster whose running Brier score is b^2 (0 <= b <= 0.5), any
// report strictly inside (b, 1-b) worsens the score regardless of the
// outcome.
ProbabilityRange guaranteed_loss_range(double b);

// Under mean relative Brier, predict only when the expected score gap
// (own minus aggregate) is strictly below the current relative score.
bool should_predict_relative(double expected_own, double expected_aggregate,
                             double current_relative);

// Relative Brier earned by reporting the community mean against the listed
// predictions: brier(mean) - mean(brier). Nonpositive by convexity; zero iff
// all predictions are equal.
double copy_community_rbs(std::span<const Probability> predictions, bool outcome);

// A question with an early decision point: with probability `early_prob` it
// resolves positively at the fraction `early_fraction` of its full span;
// otherwise it runs to the end and resolves negatively. The forecaster
// reports during the early window only (0 afterwards).
struct EarlyResolutionScenario {
    Probability early_prob;
    double early_fraction;  // in (0, 1]
    Probability belief;
};

void validate(const EarlyResolutionScenario& scenario);

// Expected truncated participation-weighted Brier of reporting `report`
// during the early window:
//   early_prob*(1-report)^2 + (1-early_prob)*early_fraction*report^2.
double expected_truncated_pwbs_early(Probability report, const EarlyResolutionScenario& scenario);

// The report minimizing that expectation for a forecaster whose honest
// probability is `belief`:
//   belief / (belief + (1-belief)*early_fraction).
// Always >= belief; grows toward 1 as the early window shrinks.
Probability optimal_dishonest_report(Probability belief, double early_fraction);

// An event with a fixed per-day probability of occurring, conditional on not
// having occurred yet. horizon_days counts the decision points S1..Sn; the
// event window spans horizon_days - 1 days.
struct HazardScenario {
    Probability daily_hazard;
    int horizon_days;  // >= 1
};

void validate(const HazardScenario& scenario);

// Entry k (k = 0 .. horizon_days-1) is the probability the event still
// happens given it has not yet: 1 - (1-h)^(horizon_days-1-k). The final entry
// is always 0; the first horizon_days-1 entries form the honest daily plan.
std::vector<Probability> survival_probabilities(const HazardScenario& scenario);

// The forecasts posted at the decision points S1..S(horizon-1); the trailing
// 0 is implied and not stored.
struct DailyForecastPlan {
    std::vector<Probability> per_day;
};

enum class PwbsVariant {
    Truncated,  // day-n branch divides by n, no-event branch by horizon-1
    Proper,     // every branch divides by horizon-1
};

// Exact expectation of the participation-weighted Brier score over the hazard
// outcomes. plan.per_day.size() must equal horizon_days - 1 and horizon_days
// must be at least 2.
double expected_pwbs_hazard(const DailyForecastPlan& plan, const HazardScenario& scenario,
                            PwbsVariant variant);

// Expected truncated PWBS for a question that is 60% likely to resolve
// positively during its first half: 0.6*(1-x)^2 + 0.2*x^2.
double halfsplit_expected_pwbs(Probability report);

// Probability that at least one success occurs in the remaining
// horizon_days - t days under the rule of succession, after days_observed
// prior failure days. Entry t for t = 0 .. horizon_days.
std::vector<Probability> laplace_trajectory(long days_observed, int horizon_days);

// p(t) = 1 - (1-p0)^((horizon-t)/horizon) for t = 0 .. horizon_days.
std::vector<Probability> naive_decay_trajectory(Probability p0, int horizon_days);

// The scenario family swept by the properness scan: each belief b on the grid
// is paired with an early-resolution scenario whose positive-resolution
// probability is b. Single-shot rules (Brier, RelativeBrier, LogDensity,
// Collaborative) ignore the window and see a plain binary question.
struct EarlyResolutionFamily {
    double early_fraction;  // in (0, 1]
};

// Expected score of `report` under `rule` when the true probability is
// `belief`, in the family's scenario. Throws unsupported_combination_error
// for rules with no expectation here (TruncatedPwbs/ProperPwbs need the
// window; the others are single-shot).
double expected_scan_score(const ScoringRuleSpec& rule, const EarlyResolutionFamily& family,
                           double belief, double report);

struct ScanPoint {
    double belief;
    double optimal_report;
    double honest_expected;   // expected score of reporting the belief
    double optimal_expected;  // expected score of the best grid report
};

struct ProprietyReport {
    ScoringRuleSpec rule;
    Probability worst_belief;
    Probability optimal_report;  // best report at the worst belief
    double honest_expected;
    double optimal_expected;
    double max_report_gap;  // max |optimal_report - belief| over the grid
    double gap_threshold;   // two report-grid steps
    bool flagged_improper;  // max_report_gap > gap_threshold
};

// One scan point per belief; the inner minimization over the report grid is
// the parallel kernel.
std::vector<ScanPoint> properness_curve(const ScoringRuleSpec& rule,
                                        const EarlyResolutionFamily& family,
                                        std::span<const double> belief_grid,
                                        std::span<const double> report_grid,
                                        ExecMode mode = ExecMode::Parallel);

// Numeric properness certification: finds the belief with the largest gap
// between the optimal grid report and honesty. A rule is flagged improper
// when that gap exceeds two report-grid steps (discretization margin).
ProprietyReport properness_scan(const ScoringRuleSpec& rule, const EarlyResolutionFamily& family,
                                std::span<const double> belief_grid,
                                std::span<const double> report_grid,
                                ExecMode mode = ExecMode::Parallel);

// Uniform grid of `points` values covering [0, 1] inclusive.
std::vector<double> unit_grid(int points);

}  // namespace forecastlab
