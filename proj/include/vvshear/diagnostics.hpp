#pragma once

#include <span>
#include <string>
#include <vector>

#include "vvshear/exact.hpp"
#include "vvshear/solver.hpp"

// Convergence and admissibility diagnostics: strong L2 distances to the shear
// flow, weak space-time pairings against a fixed smooth test family, energy
// audits, distributional Euler residuals, and log-log rate fits.

namespace vvshear {

/// phi(x, t) = e^{2 pi i (m1 x1 + m2 x2)} g(t), band-limited in space by
/// construction. The temporal profile is either a single Fourier mode
/// g(t) = e^{2 pi i q t / T} or the polynomial g(t) = (t/T)^q; q = 0 is the
/// constant profile in both cases.
struct TestFunction {
    enum class Profile { fourier, polynomial };
    int m1 = 0;
    int m2 = 0;
    int q = 0;
    Profile profile = Profile::fourier;
};

/// All spatial modes |m_i| <= max_space_mode crossed with temporal modes
/// 0 <= q <= max_time_mode.
std::vector<TestFunction> default_test_family(int max_space_mode, int max_time_mode);

struct StrongError {
    std::vector<double> per_snapshot;
    double sup = 0.0;
};

/// |u3^nu(t_j) - u3(t_j)|_{L2(T^2)} per snapshot plus the maximum.
StrongError strong_error(const ViscousTrajectory& traj, const ExactShearFlow& exact);

/// Space-time pairing int_0^T <u3^nu - u3, phi> dt; space integral by exact
/// spectral inner product, time integral by composite trapezoid over the
/// snapshot grid.
cplx weak_pairing(const ViscousTrajectory& traj, const ExactShearFlow& exact,
                  const TestFunction& phi);

/// All pairings of a family in one pass over the snapshots (one exact-flow
/// evaluation per snapshot instead of one per test function).
std::vector<cplx> weak_pairings(const ViscousTrajectory& traj, const ExactShearFlow& exact,
                                std::span<const TestFunction> family);

/// Instantaneous spatial pairings max_phi |<u3^nu(t_j) - u3(t_j), e_m>| per
/// snapshot (the per-row CSV diagnostic).
std::vector<double> spatial_pairing_max(const ViscousTrajectory& traj,
                                        const ExactShearFlow& exact, int max_space_mode);

struct AdmissibilityReport {
    bool pass = false;
    double max_violation = 0.0;  // max_j (E_j - E_0); <= 0 when admissible
};

/// Weak energy inequality on the ledger: E_j <= E_0 + 1e-12 for all j.
AdmissibilityReport admissibility_check(const ViscousTrajectory& traj);
AdmissibilityReport admissibility_check(std::span<const double> energy_ledger);

/// Distributional residual of the limit triple against the family, evaluated
/// weakly in time:
///   R(phi) = [<u3, phi>]_0^T - int <u3, dphi/dt> dt + int <dealias(v1 d1 u3), phi> dt
/// with composite trapezoid over quad_steps+1 instants.
double euler_residual(const ExactShearFlow& exact, std::span<const TestFunction> family,
                      double T, int quad_steps);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS of log-space fit residuals
};

/// Least-squares line through (log nu, log error); needs >= 3 positive pairs.
RateFit fit_rate(std::span<const double> nus, std::span<const double> errors);

/// Per-viscosity summary assembled by the sweep harness.
struct NuSummary {
    double nu = 0.0;
    double sup_l2_err_u3 = 0.0;
    double l2t_err_u1 = 0.0;          // L2(T x [0,T]) distance of u1^nu from v1
    double weak_pair_max_abs = 0.0;   // max over the space-time family
    double initial_energy = 0.0;
    double final_energy = 0.0;
    bool admissible = false;
    double admissibility_violation = 0.0;
    // per-snapshot columns
    std::vector<double> times;
    std::vector<double> l2_err_u3;
    std::vector<double> l2_err_u1;
    std::vector<double> weak_pair_max_abs_t;
    std::vector<double> energy;
};

struct ConvergenceReport {
    std::vector<double> nu_ladder;
    std::vector<NuSummary> entries;
    RateFit u1_rate;    // fit of l2t_err_u1 vs nu
    RateFit weak_rate;  // fit of weak_pair_max_abs vs nu
    std::string metadata;  // resolved config text
};

}  // namespace vvshear
