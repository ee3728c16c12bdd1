#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vvshear/diagnostics.hpp"

// Configuration, sweep orchestration, and machine-readable output.
//
// Config format: flat key = value, one pair per line, '#' comments. Unknown
// keys are rejected. CLI flags mirror the keys (--key value) and override
// file values.

namespace vvshear {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n1 = 256;
    int n2 = 256;
    int n_shear = 4096;  // 1D grid carrying u1
    double T = 0.5;
    double dt = 1e-3;
    int snapshot_stride = 5;
    double nu = 1e-2;  // single-run viscosity (subcommand `run`)
    std::vector<double> ladder = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    ShearDatum datum;
    VelocityMode velocity_mode = VelocityMode::pointwise_sign;
    int max_space_mode = 3;
    int max_time_mode = 2;
    std::string output_dir;  // empty: VVSHEAR_OUTPUT_DIR, else "out"
    std::string output_format = "both";  // csv | json | both

    /// key -> (value, was_defaulted); the full resolved picture for metadata.
    std::map<std::string, std::pair<std::string, bool>> resolved;

    Grid1D shear_grid() const { return Grid1D(n_shear); }
    Grid2D grid() const { return Grid2D(n1, n2); }
    SolverConfig solver_config() const;
    std::string resolved_output_dir() const;
};

/// Parse and validate a config text, optionally merged with CLI overrides
/// (applied after file values). Throws config_error with line/field context.
RunConfig parse_config(const std::string& text);
RunConfig parse_config(const std::string& text,
                       const std::vector<std::pair<std::string, std::string>>& overrides);

/// One viscous solve per ladder entry plus diagnostics against the exact
/// shear flow. Throws solver_integrity_error if any ledger check trips.
ConvergenceReport run_sweep(const RunConfig& config);
/// Same machinery for a single viscosity (config.nu).
ConvergenceReport run_single(const RunConfig& config);

/// Write snapshots.csv / summary.csv / report.json (per output.format) into
/// the resolved output directory; files are written to a temp name and
/// renamed. Returns the paths written.
std::vector<std::string> write_report_files(const ConvergenceReport& report,
                                            const RunConfig& config);

/// Shortest round-trip decimal formatting used in all output files.
std::string format_double(double v);

}  // namespace vvshear
