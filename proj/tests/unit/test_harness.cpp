#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vvshear/harness.hpp"

using namespace vvshear;

namespace {
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("config parsing: values, defaults, comments") {
    const RunConfig cfg = parse_config(
        "# comment line\n"
        "viscosity.ladder = 1e-1,1e-2,1e-3\n"
        "grid.n1 = 32   # trailing comment\n"
        "grid.n2 = 32\n"
        "grid.n_shear = 64\n"
        "\n"
        "time.dt = 1e-3\n");
    CHECK(cfg.ladder == std::vector<double>{0.1, 0.01, 0.001});
    CHECK(cfg.n1 == 32);
    CHECK(cfg.dt == 1e-3);

    // missing time.T: default applied and recorded as defaulted
    CHECK(cfg.T == 0.5);
    CHECK(cfg.resolved.at("time.T").second == true);
    CHECK(cfg.resolved.at("grid.n1").second == false);
    CHECK(cfg.resolved.at("time.T").first == "0.5");
}

TEST_CASE("config rejection paths") {
    CHECK_THROWS_WITH_AS(parse_config("grid.n1 = 7\n"),
                         doctest::Contains("grid.n1"), config_error);
    CHECK_THROWS_WITH_AS(parse_config("time.T = 0.5\nbogus.key = 1\n"),
                         doctest::Contains("line 2"), config_error);
    CHECK_THROWS_WITH_AS(parse_config("time.T = 0.5\ntime.dt = 3e-3\n"),
                         doctest::Contains("T/dt"), config_error);
    CHECK_THROWS_AS(parse_config("viscosity.ladder = 1e-3,1e-2\n"), config_error);
    CHECK_THROWS_AS(parse_config("viscosity.ladder = 1e-2,1e-2\n"), config_error);
    CHECK_THROWS_AS(parse_config("output.format = yaml\n"), config_error);
    CHECK_THROWS_AS(parse_config("velocity_mode = upstream\n"), config_error);
    CHECK_THROWS_AS(parse_config("grid.n1\n"), config_error);
    CHECK_THROWS_AS(parse_config("time.T = \n"), config_error);
    // pointwise sign needs the discontinuous datum
    CHECK_THROWS_AS(parse_config("datum.v1 = band_limited:1,0,-0.5\n"
                                 "velocity_mode = pointwise_sign\n"),
                    config_error);
    // the same pair is fine with the series realization
    CHECK_NOTHROW(parse_config("datum.v1 = band_limited:1,0,-0.5\n"
                               "velocity_mode = truncated_series\n"));
}

TEST_CASE("datum specs parse into the right kinds") {
    RunConfig cfg = parse_config("datum.v3 = band_limited:1,0,0,-0.5;2,1,0.3,0.1\n");
    CHECK(cfg.datum.v3.kind == V3Spec::Kind::band_limited);
    CHECK(cfg.datum.v3.modes.size() == 2);

    cfg = parse_config("datum.v3 = periodized_bump:0,0.25,0.1\n");
    CHECK(cfg.datum.v3.kind == V3Spec::Kind::periodized_bump);
    CHECK(cfg.datum.v3.width == 0.1);

    cfg = parse_config("datum.v3 = random_band_limited:4,7\n");
    CHECK(cfg.datum.v3.kind == V3Spec::Kind::random_band_limited);
    CHECK(cfg.datum.v3.seed == 7);

    CHECK_THROWS_AS(parse_config("datum.v3 = blob\n"), config_error);
    CHECK_THROWS_AS(parse_config("datum.v3 = single_mode:1,0\n"), config_error);
}

TEST_CASE("CLI-style overrides win over file values") {
    const RunConfig cfg = parse_config("grid.n1 = 64\ntime.T = 0.5\n",
                                       {{"grid.n1", "32"}, {"time.dt", "5e-4"}});
    CHECK(cfg.n1 == 32);
    CHECK(cfg.dt == 5e-4);
    CHECK_THROWS_AS(parse_config("", {{"nonsense", "1"}}), config_error);
}

TEST_CASE("output dir falls back to the environment") {
    RunConfig cfg = parse_config("");
    setenv("VVSHEAR_OUTPUT_DIR", "/tmp/vvshear_env_test", 1);
    CHECK(cfg.resolved_output_dir() == "/tmp/vvshear_env_test");
    unsetenv("VVSHEAR_OUTPUT_DIR");
    CHECK(cfg.resolved_output_dir() == "out");
    cfg.output_dir = "explicit";
    CHECK(cfg.resolved_output_dir() == "explicit");
}

TEST_CASE("format_double is shortest round-trip") {
    for (double v : {0.1, 1e-3, 0.25, 3.141592653589793, 1.0 / 3.0, 1e-17}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(1e-05) == "1e-05");
}

TEST_CASE("sweep writes deterministic, schema-stable files") {
    const auto dir = std::filesystem::temp_directory_path() / "vvshear_harness_test";
    std::filesystem::remove_all(dir);

    const RunConfig cfg = parse_config(
        "grid.n1 = 32\ngrid.n2 = 32\ngrid.n_shear = 64\n"
        "time.T = 0.02\ntime.dt = 1e-3\ntime.snapshot_stride = 5\n"
        "viscosity.ladder = 1e-1,1e-2,1e-3\n"
        "output.dir = " + dir.string() + "\n");

    const ConvergenceReport report = run_sweep(cfg);
    REQUIRE(report.entries.size() == 3);
    for (const NuSummary& s : report.entries) CHECK(s.admissible);

    write_report_files(report, cfg);
    const std::string snap1 = slurp(dir / "snapshots.csv");
    const std::string summ1 = slurp(dir / "summary.csv");
    const std::string json1 = slurp(dir / "report.json");

    // exact schema lines
    CHECK(snap1.find("nu,t,l2_err_u3,l2_err_u1,weak_pair_max_abs,energy,energy0\n") !=
          std::string::npos);
    CHECK(summ1.find("nu,sup_l2_err_u3,l2t_err_u1,weak_pair_max_abs,rate_context\n") !=
          std::string::npos);
    // metadata embedded as comments
    CHECK(snap1.find("# time.T = 0.02") != std::string::npos);
    CHECK(snap1.find("# viscosity.nu = 0.01  [default]") != std::string::npos);
    CHECK(json1.find("\"version\"") != std::string::npos);

    // identical config => identical bytes
    const ConvergenceReport report2 = run_sweep(cfg);
    write_report_files(report2, cfg);
    CHECK(slurp(dir / "snapshots.csv") == snap1);
    CHECK(slurp(dir / "summary.csv") == summ1);
    CHECK(slurp(dir / "report.json") == json1);

    std::filesystem::remove_all(dir);
}

TEST_CASE("degenerate single-entry ladder at nu = 0 is an exactness check") {
    RunConfig cfg = parse_config(
        "grid.n1 = 32\ngrid.n2 = 32\ngrid.n_shear = 64\n"
        "time.T = 0.02\ntime.dt = 1e-3\ntime.snapshot_stride = 5\n"
        "viscosity.ladder = 0\n");
    const ConvergenceReport report = run_sweep(cfg);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].sup_l2_err_u3 < 1e-12);
    CHECK(report.entries[0].l2t_err_u1 == 0.0);
    CHECK(report.entries[0].weak_pair_max_abs < 1e-12);
    CHECK(report.entries[0].admissible);
}

TEST_CASE("run_single uses viscosity.nu") {
    RunConfig cfg = parse_config(
        "grid.n1 = 32\ngrid.n2 = 32\ngrid.n_shear = 64\n"
        "time.T = 0.02\ntime.dt = 1e-3\nviscosity.nu = 5e-2\n");
    const ConvergenceReport report = run_single(cfg);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].nu == 5e-2);
}
