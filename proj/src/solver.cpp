#include "vvshear/solver.hpp"

#include <cmath>
#include <numbers>

namespace vvshear {

namespace {
constexpr double pi = std::numbers::pi;

double kinetic_energy(const Field1D& u1, const Field2D& u3) {
    const double a = l2_norm(u1);
    const double b = l2_norm(u3);
    return 0.5 * (a * a + b * b);
}
}  // namespace

long long SolverConfig::step_count() const {
    if (dt <= 0.0 || T <= 0.0) throw std::invalid_argument("dt and T must be positive");
    const double ratio = T / dt;
    const long long n = std::llround(ratio);
    if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio))
        throw std::invalid_argument("T/dt must be an integer");
    return n;
}

ShearVelocity::ShearVelocity(const V1Spec& v1, const Grid1D& x2_grid, double nu,
                             VelocityMode mode)
    : grid_(x2_grid), nu_(nu), mode_(mode) {
    if (nu < 0.0) throw std::invalid_argument("viscosity must be nonnegative");
    if (mode == VelocityMode::pointwise_sign && v1.kind != V1Spec::Kind::square_wave)
        throw std::invalid_argument("pointwise_sign velocity requires the square-wave datum");
    v1_projection_ = sample_v1(v1, x2_grid);
}

std::vector<double> ShearVelocity::samples_at(double t) const {
    if (mode_ == VelocityMode::pointwise_sign)
        return heat_square_wave_samples(nu_, t, grid_);
    return to_physical_real(heat_evolve(v1_projection_, nu_, t));
}

Field2D advect_substep(const Field2D& u3, std::span<const double> u1_samples, double tau) {
    const int n1 = u3.grid.n1(), n2 = u3.grid.n2();
    if (static_cast<int>(u1_samples.size()) != n2)
        throw std::invalid_argument("velocity samples must match the x2 grid");
    std::vector<cplx> w = to_mixed(u3);
    for (int b1 = 0; b1 < n1; ++b1) {
        const int m = u3.grid.axis1.wavenumber(b1);
        if (m == 0) continue;
        cplx* row = w.data() + static_cast<std::size_t>(b1) * n2;
        for (int j = 0; j < n2; ++j) {
            const double theta = -2.0 * pi * m * u1_samples[j] * tau;
            row[j] *= cplx{std::cos(theta), std::sin(theta)};
        }
    }
    return from_mixed(w, u3.grid, u3.real_valued);
}

Field2D diffuse_substep(const Field2D& u3, double nu, double tau) {
    if (nu < 0.0) throw std::invalid_argument("viscosity must be nonnegative");
    Field2D out = u3;
    const int n1 = u3.grid.n1(), n2 = u3.grid.n2();
    const double a = nu * 4.0 * pi * pi * tau;
    if (a == 0.0) return out;
    for (int b1 = 0; b1 < n1; ++b1) {
        const double k1 = u3.grid.axis1.wavenumber(b1);
        cplx* row = out.coeff.data() + static_cast<std::size_t>(b1) * n2;
        for (int b2 = 0; b2 < n2; ++b2) {
            const double k2 = u3.grid.axis2.wavenumber(b2);
            row[b2] *= std::exp(-a * (k1 * k1 + k2 * k2));
        }
    }
    return out;
}

Field2D strang_step(const Field2D& u3, double t, double nu, double dt,
                    const ShearVelocity& velocity) {
    Field2D f = diffuse_substep(u3, nu, 0.5 * dt);
    f = advect_substep(f, velocity.samples_at(t + 0.5 * dt), dt);
    return diffuse_substep(f, nu, 0.5 * dt);
}

ViscousTrajectory solve(const ShearDatum& datum, double nu, const SolverConfig& config,
                        const Grid1D& shear_grid, const Grid2D& grid) {
    const long long nsteps = config.step_count();
    if (config.snapshot_stride < 1) throw std::invalid_argument("snapshot_stride must be >= 1");

    const ShearVelocity velocity(datum.v1, grid.axis2, nu, config.velocity_mode);
    const Field1D v1 = sample_v1(datum.v1, shear_grid);
    Field2D u3 = sample_v3(datum.v3, grid);

    ViscousTrajectory traj;
    traj.nu = nu;
    traj.dt = config.dt;

    auto snapshot = [&](long long step) {
        const double t = step * config.dt;
        Field1D u1 = heat_evolve(v1, nu, t);
        traj.times.push_back(t);
        traj.energy_ledger.push_back(kinetic_energy(u1, u3));
        traj.u1_snapshots.push_back(std::move(u1));
        traj.u3_snapshots.push_back(u3);
    };

    snapshot(0);
    double prev_energy = traj.energy_ledger.front();
    for (long long s = 0; s < nsteps; ++s) {
        const double t = s * config.dt;
        u3 = strang_step(u3, t, nu, config.dt, velocity);
        // discrete weak energy inequality, checked every step
        const double energy = kinetic_energy(heat_evolve(v1, nu, (s + 1) * config.dt), u3);
        if (energy > prev_energy + 1e-12)
            throw solver_integrity_error("energy ledger increased beyond slack at t = " +
                                         std::to_string((s + 1) * config.dt));
        prev_energy = energy;
        if ((s + 1) % config.snapshot_stride == 0 || s + 1 == nsteps) snapshot(s + 1);
    }
    return traj;
}

}  // namespace vvshear
