#pragma once

#include <span>
#include <vector>

#include "vvshear/initial_data.hpp"
#include "vvshear/spectral.hpp"

// Closed-form reference solutions: the Euler shear flow, the limit transport
// semigroup, and the 1D heat semigroup.

namespace vvshear {

/// How the shear profile v1 enters transport and reference solutions.
enum class VelocityMode {
    pointwise_sign,     // exact sign(x2) / its exact heat evolution, sampled pointwise
    truncated_series,   // the grid-projected series, evaluated at collocation points
};

/// sign(x2) sampled at the collocation points; 0 at the jump points 0, +-1/2
/// when they land on the grid.
std::vector<double> sign_samples(const Grid1D& grid);

/// Exact heat evolution of the *untruncated* square wave sign(x2), sampled at
/// the collocation points. The full sine series is folded onto the grid bins
/// (exact aliasing), so no truncation error is introduced beyond dropping
/// terms below round-off. nu*t == 0 returns sign_samples.
std::vector<double> heat_square_wave_samples(double nu, double t, const Grid1D& grid);

/// The Euler shear flow u3(x, t) = v3(x1 - t v1(x2), x2), realized per
/// x1-mode as the phase rotation w_m(x2, t) = w_m(x2, 0) e^{-2 pi i m v1(x2) t}
/// on the collocation lines. Exact for the trigonometric interpolant.
Field2D shear_flow_eval(std::span<const double> v1_samples, const Field2D& v3, double t);

/// Solution operator of the linear transport equation
/// dw/dt + v1(x2) dw/dx1 = 0; same mechanics as shear_flow_eval, exposed as
/// the unique-solution semigroup.
Field2D transport_evolve(const Field2D& w0, std::span<const double> v1_samples, double t);

/// Exact spectral heat semigroup c_k -> c_k e^{-nu (2 pi k)^2 t}.
/// Rejects negative nu or t.
Field1D heat_evolve(const Field1D& u0, double nu, double t);

/// L2(T) distance between the heat evolution of the square wave and the
/// square wave itself, by exact mode summation over odd sine modes
/// k <= max_sine_mode.
double heat_limit_error(double nu, double t, int max_sine_mode);
/// Same with the grid's dealias cutoff as the mode limit.
double heat_limit_error(double nu, double t, const Grid1D& grid);

/// The assembled limit triple (v1(x2), 0, u3(x,t)) with pressure zero.
struct ExactShearFlow {
    Field1D v1;                      // spectral projection of the profile
    std::vector<double> v1_samples;  // profile at the x2 collocation points
    Field2D v3;
    static constexpr double pressure = 0.0;  // the ansatz forces p = 0

    Field2D u3_at(double t) const { return shear_flow_eval(v1_samples, v3, t); }
};

/// Assemble the exact flow for a datum, with the profile realized per mode.
ExactShearFlow make_exact_flow(const ShearDatum& datum, const Grid2D& grid,
                               VelocityMode mode);

}  // namespace vvshear
