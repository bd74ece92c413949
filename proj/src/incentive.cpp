// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/incentive.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "forecastlab/errors.hpp"

namespace forecastlab {

ProbabilityRange skip_range_brier(double current_score) {
    if (!(current_score >= 0.0 && current_score <= 0.25)) {
        throw std::domain_error("skip_range_brier: score must be p(1-p), i.e. in [0, 0.25]");
    }
    const double p = (1.0 - std::sqrt(1.0 - 4.0 * current_score)) / 2.0;
    return {Probability(p), Probability(1.0 - p)};
}

ProbabilityRange guaranteed_loss_range(double b) {
    if (!(b >= 0.0 && b <= 0.5)) {
        throw std::domain_error("guaranteed_loss_range: b must be in [0, 0.5]");
    }
    return {Probability(b), Probability(1.0 - b)};
}

bool should_predict_relative(double expected_own, double expected_aggregate,
                             double current_relative) {
    if (!std::isfinite(expected_own) || !std::isfinite(expected_aggregate) ||
        !std::isfinite(current_relative)) {
        throw std::domain_error("should_predict_relative: non-finite input");
    }
    return expected_own - expected_aggregate < current_relative;
}

double copy_community_rbs(std::span<const Probability> predictions, bool outcome) {
    if (predictions.empty()) {
        throw std::domain_error("copy_community_rbs: empty prediction set");
    }
    double mean_p = 0.0;
    double mean_brier = 0.0;
    for (Probability p : predictions) {
        mean_p += p.value();
        mean_brier += brier(p, outcome);
    }
    mean_p /= static_cast<double>(predictions.size());
    mean_brier /= static_cast<double>(predictions.size());
    return brier(Probability(mean_p), outcome) - mean_brier;
}

void validate(const EarlyResolutionScenario& scenario) {
    if (!(scenario.early_fraction > 0.0 && scenario.early_fraction <= 1.0)) {
        throw std::domain_error("EarlyResolutionScenario: early_fraction must be in (0, 1]");
    }
}

double expected_truncated_pwbs_early(Probability report,
                                     const EarlyResolutionScenario& scenario) {
    validate(scenario);
    const double t = scenario.early_prob.value();
    const double r = report.value();
    return t * (1.0 - r) * (1.0 - r) + (1.0 - t) * scenario.early_fraction * r * r;
}

Probability optimal_dishonest_report(Probability belief, double early_fraction) {
    if (!(early_fraction > 0.0 && early_fraction <= 1.0)) {
        throw std::domain_error("optimal_dishonest_report: early_fraction must be in (0, 1]");
    }
    const double t = belief.value();
    const double denominator = t + (1.0 - t) * early_fraction;
    if (denominator <= 0.0) {
        throw std::domain_error("optimal_dishonest_report: degenerate scenario");
    }
    return Probability(t / denominator);
}

void validate(const HazardScenario& scenario) {
    if (scenario.horizon_days < 1) {
        throw std::domain_error("HazardScenario: horizon_days must be >= 1");
    }
}

std::vector<Probability> survival_probabilities(const HazardScenario& scenario) {
    validate(scenario);
    const double h = scenario.daily_hazard.value();
    std::vector<Probability> out;
    out.reserve(static_cast<std::size_t>(scenario.horizon_days));
    for (int k = 0; k < scenario.horizon_days; ++k) {
        const int remaining = scenario.horizon_days - 1 - k;
        out.emplace_back(1.0 - std::pow(1.0 - h, remaining));
    }
    return out;
}

double expected_pwbs_hazard(const DailyForecastPlan& plan, const HazardScenario& scenario,
                            PwbsVariant variant) {
    validate(scenario);
    if (scenario.horizon_days < 2) {
        throw std::domain_error("expected_pwbs_hazard: needs at least one hazard day");
    }
    const int days = scenario.horizon_days - 1;
    if (plan.per_day.size() != static_cast<std::size_t>(days)) {
        throw std::invalid_argument("expected_pwbs_hazard: plan length must be horizon - 1");
    }
    const double h = scenario.daily_hazard.value();

    double expectation = 0.0;
    double no_event_prob = 1.0;
    double hit_brier_sum = 0.0;  // running sum of (1 - p(S_1..n))^2
    for (int n = 1; n <= days; ++n) {
        hit_brier_sum += brier(plan.per_day[static_cast<std::size_t>(n - 1)], true);
        const double branch_prob = no_event_prob * h;
        const int denominator = variant == PwbsVariant::Truncated ? n : days;
        expectation += branch_prob * hit_brier_sum / static_cast<double>(denominator);
        no_event_prob *= 1.0 - h;
    }
    double miss_brier_sum = 0.0;
    for (Probability p : plan.per_day) {
        miss_brier_sum += brier(p, false);
    }
    expectation += no_event_prob * miss_brier_sum / static_cast<double>(days);
    return expectation;
}

double halfsplit_expected_pwbs(Probability report) {
    const double x = report.value();
    return 0.6 * (1.0 - x) * (1.0 - x) + 0.2 * x * x;
}

std::vector<Probability> laplace_trajectory(long days_observed, int horizon_days) {
    if (days_observed <= 0 || horizon_days <= 0) {
        throw std::domain_error("laplace_trajectory: arguments must be positive");
    }
    std::vector<Probability> out;
    out.reserve(static_cast<std::size_t>(horizon_days) + 1);
    for (int t = 0; t <= horizon_days; ++t) {
        double none = 1.0;
        for (int k = 0; k < horizon_days - t; ++k) {
            none *= 1.0 - 1.0 / static_cast<double>(days_observed + t + k + 2);
        }
        out.emplace_back(1.0 - none);
    }
    return out;
}

std::vector<Probability> naive_decay_trajectory(Probability p0, int horizon_days) {
    if (horizon_days <= 0) {
        throw std::domain_error("naive_decay_trajectory: horizon must be positive");
    }
    if (p0.value() >= 1.0) {
        throw std::domain_error("naive_decay_trajectory: p0 must be below 1");
    }
    std::vector<Probability> out;
    out.reserve(static_cast<std::size_t>(horizon_days) + 1);
    for (int t = 0; t <= horizon_days; ++t) {
        const double exponent =
            static_cast<double>(horizon_days - t) / static_cast<double>(horizon_days);
        out.emplace_back(1.0 - std::pow(1.0 - p0.value(), exponent));
    }
    return out;
}

namespace {

// Binary log score with explicit zero-weight handling so 0 * log(0) never
// turns into NaN; a zero-probability branch contributes nothing.
double expected_log_score(double belief, double report) {
    double total = 0.0;
    if (belief > 0.0) {
        total += belief * std::log(report);
    }
    if (belief < 1.0) {
        total += (1.0 - belief) * std::log(1.0 - report);
    }
    return total;
}

}  // namespace

double expected_scan_score(const ScoringRuleSpec& rule, const EarlyResolutionFamily& family,
                           double belief, double report) {
    const double t = belief;
    const double r = report;
    const double f = family.early_fraction;
    switch (rule.kind()) {
        case RuleKind::Brier:
            return expected_brier(Probability(r), Probability(t));
        case RuleKind::RelativeBrier:
            // The crowd term is outside the forecaster's control; the
            // optimization landscape is Brier's.
            return expected_brier(Probability(r), Probability(t));
        case RuleKind::TruncatedPwbs:
            return expected_truncated_pwbs_early(
                Probability(r), EarlyResolutionScenario{Probability(t), f, Probability(t)});
        case RuleKind::ProperPwbs:
            // Early branch weighs the window at f of the planned span; the
            // late branch is unchanged. Equals f * expected_brier.
            return f * expected_brier(Probability(r), Probability(t));
        case RuleKind::LogDensity:
            return expected_log_score(t, r);
        case RuleKind::Collaborative: {
            // Aggregate and prior Briers are outside the forecaster's control;
            // only the own-score term varies with the report.
            const CollaborativeWeights& w = rule.collaborative_weights();
            return w.alpha * expected_brier(Probability(r), Probability(t));
        }
    }
    throw unsupported_combination_error("expected_scan_score: unknown rule");
}

namespace {

ScanPoint scan_one_belief(const ScoringRuleSpec& rule, const EarlyResolutionFamily& family,
                          double belief, std::span<const double> report_grid) {
    const bool lower = rule.lower_is_better();
    double best_report = report_grid.front();
    double best_score = expected_scan_score(rule, family, belief, best_report);
    for (std::size_t i = 1; i < report_grid.size(); ++i) {
        const double score = expected_scan_score(rule, family, belief, report_grid[i]);
        if (lower ? score < best_score : score > best_score) {
            best_score = score;
            best_report = report_grid[i];
        }
    }
    return ScanPoint{belief, best_report, expected_scan_score(rule, family, belief, belief),
                     best_score};
}

}  // namespace

std::vector<ScanPoint> properness_curve(const ScoringRuleSpec& rule,
                                        const EarlyResolutionFamily& family,
                                        std::span<const double> belief_grid,
                                        std::span<const double> report_grid, ExecMode mode) {
    if (belief_grid.empty() || report_grid.empty()) {
        throw std::invalid_argument("properness_curve: grids must be nonempty");
    }
    if (!(family.early_fraction > 0.0 && family.early_fraction <= 1.0)) {
        throw std::domain_error("properness_curve: early_fraction must be in (0, 1]");
    }
    std::vector<ScanPoint> curve(belief_grid.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(belief_grid.size());
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            curve[static_cast<std::size_t>(i)] = scan_one_belief(
                rule, family, belief_grid[static_cast<std::size_t>(i)], report_grid);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            curve[static_cast<std::size_t>(i)] = scan_one_belief(
                rule, family, belief_grid[static_cast<std::size_t>(i)], report_grid);
        }
    }
    return curve;
}

ProprietyReport properness_scan(const ScoringRuleSpec& rule, const EarlyResolutionFamily& family,
                                std::span<const double> belief_grid,
                                std::span<const double> report_grid, ExecMode mode) {
    const std::vector<ScanPoint> curve =
        properness_curve(rule, family, belief_grid, report_grid, mode);

    double grid_step = 0.0;
    for (std::size_t i = 1; i < report_grid.size(); ++i) {
        grid_step = std::max(grid_step, report_grid[i] - report_grid[i - 1]);
    }

    const ScanPoint* worst = &curve.front();
    for (const ScanPoint& point : curve) {
        if (std::fabs(point.optimal_report - point.belief) >
            std::fabs(worst->optimal_report - worst->belief)) {
            worst = &point;
        }
    }
    const double max_gap = std::fabs(worst->optimal_report - worst->belief);
    const double threshold = 2.0 * grid_step;
    return ProprietyReport{rule,
                           Probability(worst->belief),
                           Probability(worst->optimal_report),
                           worst->honest_expected,
                           worst->optimal_expected,
                           max_gap,
                           threshold,
                           max_gap > threshold};
}

std::vector<double> unit_grid(int points) {
    if (points < 2) {
        throw std::invalid_argument("unit_grid: needs at least 2 points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
    }
    return grid;
}

}  // namespace forecastlab
