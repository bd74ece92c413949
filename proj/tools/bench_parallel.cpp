// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Times the OpenMP replica/grid kernels against their serial reference
// implementations and checks that both produce identical results.
#include <chrono>
#include <cstdio>

#include "forecastlab/incentive.hpp"
#include "forecastlab/tournament.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

forecastlab::ContinuousTournamentConfig continuous_benchmark_config() {
    using namespace forecastlab;
    ContinuousTournamentConfig config;
    config.n_questions = 5;
    config.questions = GeneratedSpreadQuestions{20.0, 2.0};
    config.focal = ContinuousFocal{"focal", DistortionPolicy{0.0, -10.0, 1}};
    config.population = {ContinuousProfile{Archetype::NoisySkilled,
                                           "average_user",
                                           30,
                                           MeanErrorLogistic{5.0, 5.0},
                                           SpreadErrorLogistic{5.0, 5.0}}};
    config.prior_blend = 0.55;
    config.top_k = 3;
    config.replicas = 20000;
    config.master_seed = 20260809;
    return config;
}

}  // namespace

int main() {
    using namespace forecastlab;

    {
        const auto config = continuous_benchmark_config();
        auto start = Clock::now();
        const SimulationSummary serial = simulate_continuous(config, ExecMode::Serial);
        const double serial_s = seconds_since(start);
        start = Clock::now();
        const SimulationSummary parallel = simulate_continuous(config, ExecMode::Parallel);
        const double parallel_s = seconds_since(start);
        std::printf("continuous tournament, %llu replicas: serial %.3fs, openmp %.3fs (x%.2f), %s\n",
                    static_cast<unsigned long long>(config.replicas), serial_s, parallel_s,
                    serial_s / parallel_s, serial == parallel ? "identical" : "MISMATCH");
        if (!(serial == parallel)) {
            return 1;
        }
    }

    {
        BinaryTournamentConfig config;
        config.n_questions = 10;
        config.population = {
            BinaryProfile{Archetype::NoisySkilled, "noisy", 10, 0.5},
            BinaryProfile{Archetype::UnsophisticatedExtremizer, "unsoph", 10, 0.5, 0.3},
            BinaryProfile{Archetype::SophisticatedExtremizer, "soph", 5, 0.5},
            BinaryProfile{Archetype::Unskilled, "unskilled", 10, 2.0},
        };
        config.replicas = 50000;
        config.master_seed = 7;
        auto start = Clock::now();
        const SimulationSummary serial = simulate_binary(config, ExecMode::Serial);
        const double serial_s = seconds_since(start);
        start = Clock::now();
        const SimulationSummary parallel = simulate_binary(config, ExecMode::Parallel);
        const double parallel_s = seconds_since(start);
        std::printf("binary tournament, %llu replicas: serial %.3fs, openmp %.3fs (x%.2f), %s\n",
                    static_cast<unsigned long long>(config.replicas), serial_s, parallel_s,
                    serial_s / parallel_s, serial == parallel ? "identical" : "MISMATCH");
        if (!(serial == parallel)) {
            return 1;
        }
    }

    {
        const auto rule = ScoringRuleSpec::plain(RuleKind::TruncatedPwbs);
        const EarlyResolutionFamily family{2.0 / 52.0};
        const auto beliefs = unit_grid(2001);
        const auto reports = unit_grid(2001);
        auto start = Clock::now();
        const auto serial = properness_curve(rule, family, beliefs, reports, ExecMode::Serial);
        const double serial_s = seconds_since(start);
        start = Clock::now();
        const auto parallel = properness_curve(rule, family, beliefs, reports, ExecMode::Parallel);
        const double parallel_s = seconds_since(start);
        bool identical = serial.size() == parallel.size();
        for (std::size_t i = 0; identical && i < serial.size(); ++i) {
            identical = serial[i].optimal_report == parallel[i].optimal_report &&
                        serial[i].optimal_expected == parallel[i].optimal_expected;
        }
        std::printf("properness scan, 2001x2001 grid: serial %.3fs, openmp %.3fs (x%.2f), %s\n",
                    serial_s, parallel_s, serial_s / parallel_s,
                    identical ? "identical" : "MISMATCH");
        if (!identical) {
            return 1;
        }
    }
    return 0;
}
