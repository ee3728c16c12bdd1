#pragma once

#include <stdexcept>
#include <vector>

#include "vvshear/exact.hpp"
#include "vvshear/initial_data.hpp"
#include "vvshear/spectral.hpp"

// The "two-and-half" Navier-Stokes system for shear data: the first
// component obeys the autonomous 1D heat equation; the third obeys a 2D
// advection-diffusion equation advected by the first. Both substeps of the
// Strang splitting are exact exponential integrators, so the only time
// discretization error is the O(dt^2) splitting error.

namespace vvshear {

/// Raised when the discrete energy ledger increases beyond round-off slack;
/// the run is aborted (maps to CLI exit code 3).
struct solver_integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    double dt = 1e-3;
    double T = 0.5;
    int snapshot_stride = 1;
    VelocityMode velocity_mode = VelocityMode::pointwise_sign;

    /// Number of steps; throws unless T/dt is an integer within round-off.
    long long step_count() const;
};

/// The advecting shear velocity u1^nu(x2, t) evaluated at the x2 collocation
/// points of the 2D grid. pointwise_sign uses the exact untruncated heat
/// evolution of sign(x2); truncated_series evolves the grid projection.
class ShearVelocity {
public:
    ShearVelocity(const V1Spec& v1, const Grid1D& x2_grid, double nu, VelocityMode mode);

    std::vector<double> samples_at(double t) const;
    VelocityMode mode() const { return mode_; }
    double nu() const { return nu_; }

private:
    Grid1D grid_;
    double nu_;
    VelocityMode mode_;
    Field1D v1_projection_;  // used by truncated_series
};

struct ViscousTrajectory {
    double nu = 0.0;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<Field1D> u1_snapshots;
    std::vector<Field2D> u3_snapshots;
    std::vector<double> energy_ledger;  // (1/2)(|u1|^2 + |u3|^2) per snapshot
};

/// Frozen-coefficient advection over tau: per x1-mode m,
/// w_m(x2) -> w_m(x2) e^{-2 pi i m u1(x2) tau}. Exact.
Field2D advect_substep(const Field2D& u3, std::span<const double> u1_samples, double tau);

/// Exact 2D heat multiplier c_{k1,k2} -> c e^{-nu (2 pi)^2 (k1^2+k2^2) tau}.
Field2D diffuse_substep(const Field2D& u3, double nu, double tau);

/// One Strang step: diffuse(dt/2) o advect(dt, u1(t+dt/2)) o diffuse(dt/2),
/// with the advecting velocity frozen at the midpoint.
Field2D strang_step(const Field2D& u3, double t, double nu, double dt,
                    const ShearVelocity& velocity);

/// March the full system from the datum; snapshots every stride steps
/// (always including t = 0 and t = T). u1 snapshots are filled from the
/// exact heat semigroup, never time-stepped.
ViscousTrajectory solve(const ShearDatum& datum, double nu, const SolverConfig& config,
                        const Grid1D& shear_grid, const Grid2D& grid);

}  // namespace vvshear
