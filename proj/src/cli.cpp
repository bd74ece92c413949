// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "forecastlab/config.hpp"
#include "forecastlab/csv.hpp"
#include "forecastlab/errors.hpp"
#include "forecastlab/incentive.hpp"
#include "forecastlab/scoring.hpp"
#include "forecastlab/tournament.hpp"

namespace forecastlab {

namespace {

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

void add_build_comment(CsvTable& table) {
#ifdef FORECASTLAB_GIT_DESCRIBE
    table.add_comment("build", FORECASTLAB_GIT_DESCRIBE);
#else
    (void)table;
#endif
}

void write_output(const CsvTable& table, const GlobalOptions& options, std::ostream& out) {
    const std::string text = table.to_string();
    if (options.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) {
        throw input_error("cannot open output file: " + options.out_path);
    }
    file << text;
}

ConfigMap load_config(const GlobalOptions& options) {
    if (options.config_path.empty()) {
        throw input_error("missing --config <path>");
    }
    return ConfigMap::parse_file(options.config_path);
}

std::uint64_t resolve_seed(const GlobalOptions& options, const ConfigMap& config) {
    if (options.seed) {
        return *options.seed;
    }
    if (config.has("seed")) {
        return config.get_uint64("seed", 0);
    }
    throw input_error("a seed is required: pass --seed or set 'seed' in the config");
}

RuleKind parse_rule(const std::string& name) {
    static const std::map<std::string, RuleKind> kRules = {
        {"brier", RuleKind::Brier},
        {"relative_brier", RuleKind::RelativeBrier},
        {"truncated_pwbs", RuleKind::TruncatedPwbs},
        {"proper_pwbs", RuleKind::ProperPwbs},
        {"log_density", RuleKind::LogDensity},
        {"collaborative", RuleKind::Collaborative},
    };
    const auto it = kRules.find(name);
    if (it == kRules.end()) {
        throw input_error("unknown rule '" + name + "'");
    }
    return it->second;
}

// Spread-like config values may be given as true standard deviations instead
// of logistic scale parameters; the conversion factor is sqrt(3)/pi.
double spread_unit_factor(const ConfigMap& config) {
    const std::string convention = config.get_string("spread_convention", "scale");
    if (convention == "scale") {
        return 1.0;
    }
    if (convention == "sd") {
        return std::numbers::sqrt3 / std::numbers::pi;
    }
    throw input_error("spread_convention must be 'scale' or 'sd'");
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

struct ForecastSeries {
    std::string forecaster;
    std::string question;
    std::vector<TrajectorySegment> segments;
};

std::vector<ForecastSeries> read_forecast_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open forecast file: " + path);
    }
    std::vector<ForecastSeries> series;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream fields(line);
        std::string forecaster, question;
        double time = 0.0, probability = 0.0;
        if (!(fields >> forecaster)) {
            continue;  // blank line
        }
        if (!(fields >> question >> time >> probability)) {
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": expected 'forecaster question time probability'");
        }
        std::string extra;
        if (fields >> extra) {
            throw input_error(path + ":" + std::to_string(line_no) + ": trailing tokens");
        }
        if (!(probability >= 0.0 && probability <= 1.0)) {
            throw input_error(path + ":" + std::to_string(line_no) + ": probability out of [0, 1]");
        }
        const auto key = std::make_pair(forecaster, question);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, series.size()).first;
            series.push_back(ForecastSeries{forecaster, question, {}});
        }
        auto& segments = series[it->second].segments;
        if (!segments.empty() && segments.back().start >= time) {
            throw input_error(path + ":" + std::to_string(line_no) +
                              ": forecast times must strictly increase per (forecaster, question)");
        }
        segments.push_back(TrajectorySegment{time, Probability(probability)});
    }
    return series;
}

int cmd_score(const GlobalOptions& options, std::ostream& out) {
    const ConfigMap config = load_config(options);
    config.reject_unknown_keys({"forecasts", "rule", "open_time", "close_time",
                                "planned_close_time", "outcome", "seed"});
    const std::string forecast_path = config.require_string("forecasts");
    const RuleKind rule = parse_rule(config.get_string("rule", "truncated_pwbs"));
    const double open_time = config.get_double("open_time", 0.0);
    const double close_time = config.get_double("close_time", 1.0);
    const double planned_close = config.get_double("planned_close_time", close_time);
    const bool outcome = config.get_bool("outcome", false);

    if (rule != RuleKind::Brier && rule != RuleKind::TruncatedPwbs &&
        rule != RuleKind::ProperPwbs) {
        throw unsupported_combination_error(
            "the score command supports brier, truncated_pwbs and proper_pwbs");
    }

    std::vector<ScoreRecord> records;
    for (const ForecastSeries& entry : read_forecast_file(forecast_path)) {
        const ForecastTrajectory trajectory(entry.segments);
        const QuestionTimeline timeline{open_time, trajectory.entry_time(), close_time,
                                        planned_close};
        double score = 0.0;
        switch (rule) {
            case RuleKind::Brier:
                score = brier(trajectory.final_report(), outcome);
                break;
            case RuleKind::TruncatedPwbs:
                score = truncated_pwbs(trajectory, timeline, outcome);
                break;
            default:
                score = proper_pwbs(trajectory, timeline, outcome);
                break;
        }
        records.push_back(ScoreRecord{entry.forecaster, entry.question, score});
    }

    CsvTable table({"forecaster", "question", "rule", "score"});
    for (const ScoreRecord& record : records) {
        table.add_row({record.forecaster_id, record.question_id, rule_name(rule),
                       format_double(record.value)});
    }
    add_build_comment(table);
    write_output(table, options, out);
    return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int cmd_analyze(const GlobalOptions& options, std::ostream& out) {
    const ConfigMap config = load_config(options);
    const std::string analysis = config.require_string("analysis");

    if (analysis == "properness_scan") {
        config.reject_unknown_keys({"analysis", "rule", "early_fraction", "belief_points",
                                    "report_points", "collaborative_alpha", "collaborative_beta",
                                    "collaborative_gamma", "seed"});
        const RuleKind kind = parse_rule(config.get_string("rule", "truncated_pwbs"));
        ScoringRuleSpec rule = ScoringRuleSpec::plain(RuleKind::Brier);
        if (kind == RuleKind::Collaborative) {
            rule = ScoringRuleSpec::collaborative({config.get_double("collaborative_alpha", 1.0),
                                                   config.get_double("collaborative_beta", 0.0),
                                                   config.get_double("collaborative_gamma", 0.0)});
        } else {
            rule = ScoringRuleSpec::plain(kind);
        }
        const EarlyResolutionFamily family{config.get_double("early_fraction", 2.0 / 52.0)};
        const std::vector<double> beliefs = unit_grid(config.get_int("belief_points", 1001));
        const std::vector<double> reports = unit_grid(config.get_int("report_points", 1001));
        const std::vector<ScanPoint> curve = properness_curve(rule, family, beliefs, reports);
        const ProprietyReport report = properness_scan(rule, family, beliefs, reports);

        CsvTable table(
            {"belief", "optimal_report", "honest_expected", "optimal_expected", "report_gap"});
        for (const ScanPoint& point : curve) {
            table.add_row({format_double(point.belief), format_double(point.optimal_report),
                           format_double(point.honest_expected),
                           format_double(point.optimal_expected),
                           format_double(std::fabs(point.optimal_report - point.belief))});
        }
        table.add_comment("rule", rule_name(kind));
        table.add_comment("early_fraction", format_double(family.early_fraction));
        table.add_comment("worst_belief", format_double(report.worst_belief.value()));
        table.add_comment("optimal_report_at_worst", format_double(report.optimal_report.value()));
        table.add_comment("max_report_gap", format_double(report.max_report_gap));
        table.add_comment("gap_threshold", format_double(report.gap_threshold));
        table.add_comment("verdict", report.flagged_improper ? "improper" : "proper");
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (analysis == "extremize_demo") {
        config.reject_unknown_keys(
            {"analysis", "daily_hazard", "horizon_days", "extremized_plan", "seed"});
        const HazardScenario scenario{Probability(config.get_double("daily_hazard", 0.25)),
                                      config.get_int("horizon_days", 5)};
        const std::vector<Probability> survival = survival_probabilities(scenario);
        DailyForecastPlan honest;
        honest.per_day.assign(survival.begin(), survival.end() - 1);
        DailyForecastPlan extremized;
        for (double v : config.get_double_list("extremized_plan", {0.8, 0.65, 0.35, 0.2})) {
            extremized.per_day.emplace_back(v);
        }

        CsvTable table({"plan", "variant", "expected_score"});
        const auto emit = [&](const char* label, const DailyForecastPlan& plan) {
            table.add_row({label, "truncated",
                           format_double(expected_pwbs_hazard(plan, scenario, PwbsVariant::Truncated))});
            table.add_row({label, "proper",
                           format_double(expected_pwbs_hazard(plan, scenario, PwbsVariant::Proper))});
        };
        emit("honest", honest);
        emit("extremized", extremized);

        std::string honest_text;
        for (std::size_t i = 0; i < honest.per_day.size(); ++i) {
            honest_text += (i ? " " : "") + format_double(honest.per_day[i].value());
        }
        table.add_comment("honest_plan", honest_text);
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (analysis == "hazard_survival") {
        config.reject_unknown_keys({"analysis", "daily_hazard", "horizon_days", "seed"});
        const HazardScenario scenario{Probability(config.get_double("daily_hazard", 0.25)),
                                      config.get_int("horizon_days", 5)};
        CsvTable table({"point", "probability"});
        const std::vector<Probability> survival = survival_probabilities(scenario);
        for (std::size_t k = 0; k < survival.size(); ++k) {
            table.add_row({std::to_string(k + 1), format_double(survival[k].value())});
        }
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (analysis == "laplace" || analysis == "naive_decay") {
        config.reject_unknown_keys(
            {"analysis", "days_observed", "horizon_days", "initial_probability", "seed"});
        const int horizon = config.get_int("horizon_days", 182);
        std::vector<Probability> curve;
        if (analysis == "laplace") {
            curve = laplace_trajectory(
                static_cast<long>(config.get_uint64("days_observed", 2346)), horizon);
        } else {
            curve = naive_decay_trajectory(
                Probability(config.get_double("initial_probability", 0.66)), horizon);
        }
        CsvTable table({"day", "probability"});
        for (std::size_t t = 0; t < curve.size(); ++t) {
            table.add_row({std::to_string(t), format_double(curve[t].value())});
        }
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    throw input_error("unknown analysis '" + analysis + "'");
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

void add_summary_rows(CsvTable& table, const SimulationSummary& summary,
                      const std::string& focal_label) {
    if (summary.has_focal) {
        table.add_row({focal_label, "1", format_double(summary.focal_mean_score()),
                       std::to_string(summary.focal_topk_count),
                       format_double(summary.focal_topk_frequency())});
    }
    for (std::size_t g = 0; g < summary.profiles.size(); ++g) {
        const ProfileStats& stats = summary.profiles[g];
        table.add_row({stats.label, std::to_string(stats.members),
                       format_double(summary.mean_score(g)), std::to_string(stats.topk_count),
                       format_double(summary.topk_frequency(g))});
    }
}

ContinuousProfile average_user_profile(int count, double noise, double unit) {
    return ContinuousProfile{Archetype::NoisySkilled,
                             "average_user",
                             count,
                             MeanErrorLogistic{noise, noise * unit},
                             SpreadErrorLogistic{noise * unit, noise * unit * unit}};
}

ContinuousTournamentConfig distortion_base_config(const ConfigMap& config, std::uint64_t seed) {
    const double unit = spread_unit_factor(config);
    ContinuousTournamentConfig base;
    base.n_questions = config.get_int("questions", 5);
    base.questions =
        GeneratedSpreadQuestions{config.get_double("question_meta_location", 20.0) * unit,
                                 config.get_double("question_meta_spread", 2.0) * unit * unit};
    base.focal = ContinuousFocal{"focal_perfect", std::nullopt};
    base.population = {
        average_user_profile(config.get_int("rivals", 30), config.get_double("rival_noise", 5.0), unit)};
    base.prior_blend = config.get_double("prior_blend", 0.55);
    base.top_k = config.get_int("top_k", 3);
    base.replicas = config.get_uint64("replicas", 2000);
    base.master_seed = seed;
    return base;
}

const std::vector<std::string> kDistortionKeys = {
    "experiment", "questions", "rivals", "rival_noise", "question_meta_location",
    "question_meta_spread", "prior_blend", "top_k", "replicas", "seed", "spread_convention",
    "delta_mean", "delta_spread", "n_distorted", "delta_mean_grid", "delta_spread_grid",
    "n_distorted_grid"};

int cmd_simulate(const GlobalOptions& options, std::ostream& out) {
    const ConfigMap config = load_config(options);
    const std::string experiment = config.require_string("experiment");
    const std::uint64_t seed = resolve_seed(options, config);

    if (experiment == "continuous_tournament") {
        config.reject_unknown_keys(kDistortionKeys);
        ContinuousTournamentConfig tournament = distortion_base_config(config, seed);
        const double unit = spread_unit_factor(config);
        const int n_distorted = config.get_int("n_distorted", 0);
        if (n_distorted > 0) {
            tournament.focal->distortion =
                DistortionPolicy{config.get_double("delta_mean", 0.0),
                                 config.get_double("delta_spread", 0.0) * unit, n_distorted};
        }
        const SimulationSummary summary = simulate_continuous(tournament);
        CsvTable table({"profile", "members", "mean_score", "topk_count", "topk_frequency"});
        add_summary_rows(table, summary, tournament.focal->label);
        table.add_comment("experiment", experiment);
        table.add_comment("seed", std::to_string(seed));
        table.add_comment("replicas", std::to_string(summary.replica_count));
        table.add_comment("top_k", std::to_string(summary.top_k));
        table.add_comment("prior_blend", format_double(tournament.prior_blend));
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (experiment == "distortion_sweep") {
        config.reject_unknown_keys(kDistortionKeys);
        const ContinuousTournamentConfig base = distortion_base_config(config, seed);
        const double unit = spread_unit_factor(config);
        std::vector<double> mean_grid = config.get_double_list("delta_mean_grid", {0.0, 50.0});
        std::vector<double> spread_grid =
            config.get_double_list("delta_spread_grid", {-12.0, -10.0, -8.0, -6.0, 0.0, 12.0});
        for (double& v : spread_grid) {
            v *= unit;
        }
        const std::vector<int> n_grid = config.get_int_list("n_distorted_grid", {0, 1, 2});
        const std::vector<DistortionCell> cells =
            sweep_distortion(base, mean_grid, spread_grid, n_grid);

        CsvTable table({"delta_mean", "delta_spread", "n_distorted", "focal_topk_count", "replicas",
                        "focal_topk_frequency"});
        for (const DistortionCell& cell : cells) {
            table.add_row({format_double(cell.delta_mean), format_double(cell.delta_spread),
                           std::to_string(cell.n_distorted), std::to_string(cell.focal_topk_count),
                           std::to_string(cell.replicas),
                           format_double(cell.focal_topk_frequency())});
        }
        table.add_comment("experiment", experiment);
        table.add_comment("seed", std::to_string(seed));
        table.add_comment("replicas", std::to_string(base.replicas));
        table.add_comment("top_k", std::to_string(base.top_k));
        table.add_comment("prior_blend", format_double(base.prior_blend));
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (experiment == "binary_tournament") {
        config.reject_unknown_keys({"experiment", "questions", "noisy_count",
                                    "unsophisticated_count", "sophisticated_count",
                                    "unskilled_count", "copier_count", "skilled_bits",
                                    "extremize_bits", "unskilled_bits", "prob_lo", "prob_hi",
                                    "rule", "relative_baseline", "top_k", "replicas", "seed"});
        BinaryTournamentConfig tournament;
        tournament.n_questions = config.get_int("questions", 10);
        tournament.prob_lo = config.get_double("prob_lo", 0.01);
        tournament.prob_hi = config.get_double("prob_hi", 0.99);
        const double skilled_bits = config.get_double("skilled_bits", 0.5);
        const double extremize_bits = config.get_double("extremize_bits", 0.3);
        const double unskilled_bits = config.get_double("unskilled_bits", 2.0);
        const auto add_group = [&](Archetype archetype, const char* label, int count,
                                   double noise_bits, double extra_bits) {
            if (count > 0) {
                tournament.population.push_back(
                    BinaryProfile{archetype, label, count, noise_bits, extra_bits});
            }
        };
        add_group(Archetype::NoisySkilled, "noisy_skilled", config.get_int("noisy_count", 10),
                  skilled_bits, 0.0);
        add_group(Archetype::UnsophisticatedExtremizer, "unsophisticated_extremizer",
                  config.get_int("unsophisticated_count", 10), skilled_bits, extremize_bits);
        add_group(Archetype::SophisticatedExtremizer, "sophisticated_extremizer",
                  config.get_int("sophisticated_count", 5), skilled_bits, 0.0);
        add_group(Archetype::Unskilled, "unskilled", config.get_int("unskilled_count", 10),
                  unskilled_bits, 0.0);
        add_group(Archetype::CommunityCopier, "community_copier", config.get_int("copier_count", 0),
                  0.0, 0.0);
        tournament.rule = ScoringRuleSpec::plain(parse_rule(config.get_string("rule", "brier")));
        const std::string baseline = config.get_string("relative_baseline", "mean_of_others");
        if (baseline == "aggregate_brier") {
            tournament.relative_baseline = RelativeBaseline::AggregateBrier;
        } else if (baseline != "mean_of_others") {
            throw input_error("relative_baseline must be 'mean_of_others' or 'aggregate_brier'");
        }
        tournament.top_k = config.get_int("top_k", 5);
        tournament.replicas = config.get_uint64("replicas", 10000);
        tournament.master_seed = seed;

        const SimulationSummary summary = simulate_binary(tournament);
        CsvTable table({"profile", "members", "mean_score", "topk_count", "topk_frequency"});
        add_summary_rows(table, summary, "focal");
        table.add_comment("experiment", experiment);
        table.add_comment("seed", std::to_string(seed));
        table.add_comment("replicas", std::to_string(summary.replica_count));
        table.add_comment("top_k", std::to_string(summary.top_k));
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (experiment == "population_mix") {
        config.reject_unknown_keys({"experiment", "questions", "question_location",
                                    "question_spread", "prior_blend", "top_k", "replicas", "seed",
                                    "spread_convention"});
        PopulationMixParams params;
        params.n_questions = config.get_int("questions", params.n_questions);
        params.question_location = config.get_double("question_location", params.question_location);
        params.question_spread = config.get_double("question_spread", params.question_spread);
        params.prior_blend = config.get_double("prior_blend", params.prior_blend);
        params.spread_unit = spread_unit_factor(config);
        params.top_k = config.get_int("top_k", params.top_k);
        params.replicas = config.get_uint64("replicas", params.replicas);
        params.master_seed = seed;

        const SimulationSummary summary = simulate_population_mix(params);
        CsvTable table({"profile", "members", "mean_score", "topk_count", "topk_frequency"});
        add_summary_rows(table, summary, "perfect");
        table.add_comment("experiment", experiment);
        table.add_comment("seed", std::to_string(seed));
        table.add_comment("replicas", std::to_string(summary.replica_count));
        table.add_comment("top_k", std::to_string(summary.top_k));
        table.add_comment("prior_blend", format_double(params.prior_blend));
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (experiment == "question_count_sweep") {
        config.reject_unknown_keys({"experiment", "n_grid", "noisy_count", "unsophisticated_count",
                                    "sophisticated_count", "unskilled_count", "skilled_bits",
                                    "extremize_bits", "unskilled_bits", "prob_lo", "prob_hi",
                                    "replicas", "seed"});
        BinaryTournamentConfig base;
        base.n_questions = 10;
        base.prob_lo = config.get_double("prob_lo", 0.01);
        base.prob_hi = config.get_double("prob_hi", 0.99);
        const double skilled_bits = config.get_double("skilled_bits", 0.5);
        base.population = {
            BinaryProfile{Archetype::NoisySkilled, "noisy_skilled",
                          config.get_int("noisy_count", 10), skilled_bits, 0.0},
            BinaryProfile{Archetype::UnsophisticatedExtremizer, "unsophisticated_extremizer",
                          config.get_int("unsophisticated_count", 10), skilled_bits,
                          config.get_double("extremize_bits", 0.3)},
            BinaryProfile{Archetype::SophisticatedExtremizer, "sophisticated_extremizer",
                          config.get_int("sophisticated_count", 5), skilled_bits, 0.0},
            BinaryProfile{Archetype::Unskilled, "unskilled", config.get_int("unskilled_count", 10),
                          config.get_double("unskilled_bits", 2.0), 0.0},
        };
        base.replicas = config.get_uint64("replicas", 1000);
        base.master_seed = seed;
        std::vector<int> n_grid =
            config.get_int_list("n_grid", {5, 10, 15, 20, 25, 30, 35, 40, 45, 50});

        const std::vector<QuestionCountPoint> points = sweep_question_count(base, n_grid);
        CsvTable table({"n_questions", "honest_best_count", "replicas", "honest_best_frequency"});
        for (const QuestionCountPoint& point : points) {
            table.add_row({std::to_string(point.n_questions),
                           std::to_string(point.honest_best_count), std::to_string(point.replicas),
                           format_double(point.honest_best_frequency())});
        }
        table.add_comment("experiment", experiment);
        table.add_comment("seed", std::to_string(seed));
        table.add_comment("replicas", std::to_string(base.replicas));
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    if (experiment == "sybil") {
        config.reject_unknown_keys({"experiment", "questions", "rivals", "puppets", "skilled_bits",
                                    "sybil_bits", "prob_lo", "prob_hi", "replicas", "seed"});
        BinaryTournamentConfig base;
        base.n_questions = config.get_int("questions", 10);
        base.prob_lo = config.get_double("prob_lo", 0.01);
        base.prob_hi = config.get_double("prob_hi", 0.99);
        const double skilled_bits = config.get_double("skilled_bits", 0.5);
        const double sybil_bits = config.get_double("sybil_bits", 6.0);
        base.population = {
            BinaryProfile{Archetype::NoisySkilled, "attacker", 1, skilled_bits, 0.0, sybil_bits},
            BinaryProfile{Archetype::NoisySkilled, "rivals", config.get_int("rivals", 20),
                          skilled_bits, 0.0, sybil_bits},
        };
        base.rule = ScoringRuleSpec::plain(RuleKind::RelativeBrier);
        base.replicas = config.get_uint64("replicas", 10000);
        base.master_seed = seed;
        const int puppets = config.get_int("puppets", 10);

        const SybilOutcome outcome = sybil_experiment(base, puppets);
        CsvTable table({"arm", "puppets", "mean_relative_brier", "mean_absolute_brier"});
        table.add_row({"without", "0", format_double(outcome.attacker_relative_without),
                       format_double(outcome.attacker_brier_without)});
        table.add_row({"with", std::to_string(puppets),
                       format_double(outcome.attacker_relative_with),
                       format_double(outcome.attacker_brier_with)});
        table.add_comment("experiment", experiment);
        table.add_comment("seed", std::to_string(seed));
        table.add_comment("replicas", std::to_string(base.replicas));
        add_build_comment(table);
        write_output(table, options, out);
        return 0;
    }

    throw input_error("unknown experiment '" + experiment + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"scoring-rule laboratory and forecasting-tournament simulator"};
    app.require_subcommand(1);

    GlobalOptions options;
    std::uint64_t seed_value = 0;
    app.add_option("--config", options.config_path, "key = value configuration file");
    auto* seed_option = app.add_option("--seed", seed_value, "master seed (overrides the config)");
    app.add_option("--out", options.out_path, "output file (default: stdout)");

    CLI::App* score = app.add_subcommand("score", "score forecast trajectories from a file");
    CLI::App* analyze = app.add_subcommand("analyze", "closed-form incentive analyses");
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo tournament experiments");

    std::vector<const char*> argv;
    argv.push_back("forecastlab");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (seed_option->count() > 0) {
        options.seed = seed_value;
    }

    try {
        if (score->parsed()) {
            return cmd_score(options, out);
        }
        if (analyze->parsed()) {
            return cmd_analyze(options, out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(options, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_combination_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        // Domain violations at this level trace back to configured values.
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace forecastlab
