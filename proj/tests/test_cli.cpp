// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "forecastlab/cli.hpp"
#include "forecastlab/config.hpp"
#include "forecastlab/csv.hpp"
#include "forecastlab/errors.hpp"

using namespace forecastlab;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& contents) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

double cell_as_double(const CsvTable& table, std::size_t row, std::size_t col) {
    return std::stod(table.rows().at(row).at(col));
}

}  // namespace

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 2.0 / 52.0, 1e-17, 123456.789, 0.0, -0.25}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("csv emit/parse round-trip is byte-identical") {
    CsvTable table({"a", "b"});
    table.add_row({"x", format_double(1.0 / 3.0)});
    table.add_row({"y", format_double(-2.5e-9)});
    table.add_comment("seed", "42");
    const std::string first = table.to_string();
    std::istringstream in(first);
    const CsvTable parsed = CsvTable::parse(in);
    CHECK(parsed.to_string() == first);
}

TEST_CASE("csv parse validates the stated row count") {
    std::istringstream in("a,b\n1,2\n# rows: 3\n");
    CHECK_THROWS_AS(CsvTable::parse(in), input_error);
    std::istringstream ragged("a,b\n1\n# rows: 1\n");
    CHECK_THROWS_AS(CsvTable::parse(ragged), input_error);
}

TEST_CASE("config parsing and unknown-key rejection") {
    std::istringstream in(
        "alpha = 1.5\n"
        "grid = 1, 2, 3  # trailing comment\n"
        "name = hello\n");
    const ConfigMap config = ConfigMap::parse(in, "test");
    CHECK(config.get_double("alpha", 0.0) == 1.5);
    CHECK(config.get_double_list("grid", {}) == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(config.get_string("name", "") == "hello");
    CHECK(config.get_int("missing", 7) == 7);
    CHECK_NOTHROW(config.reject_unknown_keys({"alpha", "grid", "name"}));
    CHECK_THROWS_AS(config.reject_unknown_keys({"alpha", "grid"}), input_error);

    std::istringstream dup("a = 1\na = 2\n");
    CHECK_THROWS_AS(ConfigMap::parse(dup, "dup"), input_error);
    std::istringstream bad("a 1\n");
    CHECK_THROWS_AS(ConfigMap::parse(bad, "bad"), input_error);
}

TEST_CASE("score command reproduces the two-week truncation arithmetic") {
    TempFile forecasts("fl_forecasts.txt",
                       "# forecaster question time probability\n"
                       "alice q1 0 0.74286\n"
                       "alice q1 2 0\n"
                       "bob q1 0 0.1\n"
                       "bob q1 2 0\n");
    TempFile config("fl_score.cfg",
                    "forecasts = " + forecasts.str() +
                        "\n"
                        "rule = truncated_pwbs\n"
                        "open_time = 0\n"
                        "close_time = 52\n"
                        "outcome = false\n");
    const CliResult result = run({"--config", config.str(), "score"});
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    const CsvTable table = CsvTable::parse(in);
    REQUIRE(table.rows().size() == 2);
    CHECK(cell_as_double(table, 0, 3) ==
          doctest::Approx(2.0 / 52.0 * 0.74286 * 0.74286).epsilon(1e-12));
    CHECK(cell_as_double(table, 1, 3) == doctest::Approx(2.0 / 52.0 * 0.01).epsilon(1e-12));

    // Same file under the full-span rule: every score scales by close/planned.
    TempFile proper_config("fl_score_proper.cfg",
                           "forecasts = " + forecasts.str() +
                               "\n"
                               "rule = proper_pwbs\n"
                               "open_time = 0\n"
                               "close_time = 52\n"
                               "planned_close_time = 104\n"
                               "outcome = false\n");
    const CliResult proper = run({"--config", proper_config.str(), "score"});
    REQUIRE(proper.exit_code == 0);
    std::istringstream proper_in(proper.out);
    const CsvTable proper_table = CsvTable::parse(proper_in);
    CHECK(cell_as_double(proper_table, 0, 3) ==
          doctest::Approx(cell_as_double(table, 0, 3) * 52.0 / 104.0).epsilon(1e-12));
}

TEST_CASE("score command handles an empty forecast file") {
    TempFile forecasts("fl_empty.txt", "# nothing here\n\n");
    TempFile config("fl_empty.cfg", "forecasts = " + forecasts.str() + "\nrule = brier\n");
    const CliResult result = run({"--config", config.str(), "score"});
    CHECK(result.exit_code == 0);
    std::istringstream in(result.out);
    CHECK(CsvTable::parse(in).rows().empty());
}

TEST_CASE("score command diagnoses malformed input with the line number") {
    TempFile forecasts("fl_bad.txt", "alice q1 0 0.5\nalice q1 zero 0.5\n");
    TempFile config("fl_bad.cfg", "forecasts = " + forecasts.str() + "\n");
    const CliResult result = run({"--config", config.str(), "score"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find(":2") != std::string::npos);
}

TEST_CASE("score command rejects unsupported rules with exit 3") {
    TempFile forecasts("fl_ok.txt", "alice q1 0 0.5\n");
    TempFile config("fl_rule.cfg",
                    "forecasts = " + forecasts.str() + "\nrule = log_density\n");
    const CliResult result = run({"--config", config.str(), "score"});
    CHECK(result.exit_code == 3);
}

TEST_CASE("unknown config keys are a hard error") {
    TempFile config("fl_unknown.cfg",
                    "analysis = laplace\nhorizon_days = 10\ndays_observed = 100\nbogus = 1\n");
    const CliResult result = run({"--config", config.str(), "analyze"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("bogus") != std::string::npos);
}

TEST_CASE("analyze properness_scan pinpoints the two-week misincentive") {
    TempFile config("fl_scan.cfg",
                    "analysis = properness_scan\n"
                    "rule = truncated_pwbs\n"
                    "early_fraction = 0.038461538461538464\n"
                    "belief_points = 1001\n"
                    "report_points = 1001\n");
    const CliResult result = run({"--config", config.str(), "analyze"});
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    const CsvTable table = CsvTable::parse(in);
    REQUIRE(table.rows().size() == 1001);
    // Row 100 is belief 0.1; optimal report ~ 0.7429.
    CHECK(cell_as_double(table, 100, 0) == doctest::Approx(0.1));
    CHECK(cell_as_double(table, 100, 1) == doctest::Approx(0.7429).epsilon(2e-3));
    bool improper = false;
    for (const std::string& comment : table.comments()) {
        if (comment.find("verdict: improper") != std::string::npos) {
            improper = true;
        }
    }
    CHECK(improper);
}

TEST_CASE("analyze extremize_demo emits the four published expectations") {
    TempFile config("fl_demo.cfg", "analysis = extremize_demo\n");
    const CliResult result = run({"--config", config.str(), "analyze"});
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    const CsvTable table = CsvTable::parse(in);
    REQUIRE(table.rows().size() == 4);
    CHECK(std::fabs(cell_as_double(table, 0, 2) - 0.193) < 5e-4);  // honest truncated
    CHECK(std::fabs(cell_as_double(table, 1, 2) - 0.154) < 5e-4);  // honest proper
    CHECK(std::fabs(cell_as_double(table, 2, 2) - 0.182) < 5e-4);  // extremized truncated
    CHECK(std::fabs(cell_as_double(table, 3, 2) - 0.160) < 5e-4);  // extremized proper
}

TEST_CASE("analyze trajectories start and end where they should") {
    TempFile naive("fl_naive.cfg",
                   "analysis = naive_decay\ninitial_probability = 0.66\nhorizon_days = 182\n");
    const CliResult result = run({"--config", naive.str(), "analyze"});
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    const CsvTable table = CsvTable::parse(in);
    REQUIRE(table.rows().size() == 183);
    CHECK(cell_as_double(table, 0, 1) == doctest::Approx(0.66));
    CHECK(cell_as_double(table, 182, 1) == 0.0);

    TempFile laplace("fl_laplace.cfg",
                     "analysis = laplace\ndays_observed = 2346\nhorizon_days = 182\n");
    const CliResult lap = run({"--config", laplace.str(), "analyze"});
    REQUIRE(lap.exit_code == 0);
    std::istringstream lap_in(lap.out);
    const CsvTable lap_table = CsvTable::parse(lap_in);
    CHECK(cell_as_double(lap_table, 0, 1) == doctest::Approx(182.0 / 2529.0).epsilon(1e-9));
}

TEST_CASE("simulate is byte-identical across repeated runs") {
    TempFile config("fl_sim.cfg",
                    "experiment = binary_tournament\n"
                    "replicas = 200\n"
                    "seed = 31337\n");
    const CliResult first = run({"--config", config.str(), "simulate"});
    const CliResult second = run({"--config", config.str(), "simulate"});
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("# seed: 31337") != std::string::npos);

    // The --seed flag overrides the config key.
    const CliResult other = run({"--config", config.str(), "--seed", "7", "simulate"});
    CHECK(other.out != first.out);
    CHECK(other.out.find("# seed: 7") != std::string::npos);
}

TEST_CASE("simulate requires a seed") {
    TempFile config("fl_noseed.cfg", "experiment = binary_tournament\nreplicas = 10\n");
    const CliResult result = run({"--config", config.str(), "simulate"});
    CHECK(result.exit_code == 2);
}

TEST_CASE("simulate writes to a file when asked") {
    TempFile config("fl_outfile.cfg",
                    "experiment = binary_tournament\nreplicas = 50\nseed = 9\n");
    const std::filesystem::path out_path =
        std::filesystem::temp_directory_path() / "fl_out.csv";
    const CliResult result =
        run({"--config", config.str(), "--out", out_path.string(), "simulate"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.empty());
    std::ifstream in(out_path);
    REQUIRE(in.good());
    const CsvTable table = CsvTable::parse(in);
    CHECK(table.rows().size() == 4);
    std::filesystem::remove(out_path);
}

TEST_CASE("distortion sweep emits one row per grid cell") {
    TempFile config("fl_sweep.cfg",
                    "experiment = distortion_sweep\n"
                    "replicas = 60\n"
                    "seed = 12\n"
                    "delta_mean_grid = 0\n"
                    "delta_spread_grid = 0, -8\n"
                    "n_distorted_grid = 1\n");
    const CliResult result = run({"--config", config.str(), "simulate"});
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    const CsvTable table = CsvTable::parse(in);
    CHECK(table.rows().size() == 2);
}

TEST_CASE("spread_convention=sd rescales and still runs") {
    TempFile scale_cfg("fl_scale.cfg",
                       "experiment = continuous_tournament\nreplicas = 40\nseed = 5\n");
    TempFile sd_cfg("fl_sd.cfg",
                    "experiment = continuous_tournament\nreplicas = 40\nseed = 5\n"
                    "spread_convention = sd\n");
    const CliResult scale_run = run({"--config", scale_cfg.str(), "simulate"});
    const CliResult sd_run = run({"--config", sd_cfg.str(), "simulate"});
    REQUIRE(scale_run.exit_code == 0);
    REQUIRE(sd_run.exit_code == 0);
    CHECK(scale_run.out != sd_run.out);  // genuinely different sampling units
}

TEST_CASE("analyze rejects out-of-domain configuration values with exit 2") {
    TempFile config("fl_badfrac.cfg",
                    "analysis = properness_scan\nearly_fraction = 0\nbelief_points = 11\n"
                    "report_points = 11\n");
    CHECK(run({"--config", config.str(), "analyze"}).exit_code == 2);

    TempFile plan("fl_badplan.cfg", "analysis = extremize_demo\nextremized_plan = 0.8, 1.4\n");
    CHECK(run({"--config", plan.str(), "analyze"}).exit_code == 2);
}

TEST_CASE("simulate rejects unsupported rule pairings with exit 3") {
    TempFile config("fl_badrule.cfg",
                    "experiment = binary_tournament\nreplicas = 10\nseed = 1\n"
                    "rule = log_density\n");
    CHECK(run({"--config", config.str(), "simulate"}).exit_code == 3);
}

TEST_CASE("cli usage errors exit with 2") {
    const CliResult nocmd = run({});
    CHECK(nocmd.exit_code == 2);
    const CliResult badflag = run({"--bogus", "simulate"});
    CHECK(badflag.exit_code == 2);
    const CliResult noconfig = run({"simulate"});
    CHECK(noconfig.exit_code == 2);
}
