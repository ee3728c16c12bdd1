#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vvshear/spectral.hpp"

// Self-verification suite behind the `verify` subcommand: runs the library's
// structural invariants at a range of grid sizes and reports per-check
// status. Shared with the acceptance tests.

namespace vvshear {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // worst observed quantity vs threshold
};

/// Signature of a heat-semigroup evolver, factored out so a corrupted
/// multiplier can be injected by tests.
using HeatEvolver = std::function<Field1D(const Field1D&, double, double)>;

/// Semigroup law e(t1+t2) = e(t2) o e(t1) for the given evolver.
CheckResult check_heat_semigroup(const HeatEvolver& evolve, int n = 64);

/// Sizes used by the default suite.
std::vector<int> verification_grid_sizes(int max_size = 512);

/// Run every check; all pass on a correct build.
std::vector<CheckResult> run_verification_suite(int max_size = 512);

}  // namespace vvshear
