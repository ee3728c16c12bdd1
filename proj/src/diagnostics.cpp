#include "vvshear/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vvshear {

namespace {
constexpr double pi = std::numbers::pi;

cplx temporal_profile(const TestFunction& phi, double t, double T) {
    if (phi.profile == TestFunction::Profile::polynomial)
        return cplx{std::pow(t / T, phi.q), 0.0};
    const double theta = 2.0 * pi * phi.q * t / T;
    return cplx{std::cos(theta), std::sin(theta)};
}

cplx temporal_profile_dot(const TestFunction& phi, double t, double T) {
    if (phi.profile == TestFunction::Profile::polynomial) {
        if (phi.q == 0) return cplx{0.0, 0.0};
        return cplx{phi.q * std::pow(t / T, phi.q - 1) / T, 0.0};
    }
    return cplx{0.0, 2.0 * pi * phi.q / T} * temporal_profile(phi, t, T);
}

// Trapezoid weights for a (possibly nonuniform) strictly increasing time grid.
std::vector<double> trapezoid_weights(std::span<const double> times) {
    const std::size_t n = times.size();
    if (n < 2) throw std::invalid_argument("need at least two time instants");
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double h = times[j + 1] - times[j];
        if (h <= 0.0) throw std::invalid_argument("times must be strictly increasing");
        w[j] += 0.5 * h;
        w[j + 1] += 0.5 * h;
    }
    return w;
}

void check_match(const ViscousTrajectory& traj, const ExactShearFlow& exact) {
    if (traj.u3_snapshots.empty()) throw std::invalid_argument("empty trajectory");
    if (!(traj.u3_snapshots.front().grid == exact.v3.grid))
        throw std::invalid_argument("trajectory and exact flow live on different grids");
}
}  // namespace

std::vector<TestFunction> default_test_family(int max_space_mode, int max_time_mode) {
    std::vector<TestFunction> family;
    for (int m1 = -max_space_mode; m1 <= max_space_mode; ++m1)
        for (int m2 = -max_space_mode; m2 <= max_space_mode; ++m2)
            for (int q = 0; q <= max_time_mode; ++q) family.push_back({m1, m2, q});
    return family;
}

StrongError strong_error(const ViscousTrajectory& traj, const ExactShearFlow& exact) {
    check_match(traj, exact);
    StrongError err;
    err.per_snapshot.reserve(traj.times.size());
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        Field2D diff = traj.u3_snapshots[j];
        const Field2D ref = exact.u3_at(traj.times[j]);
        for (std::size_t i = 0; i < diff.coeff.size(); ++i) diff.coeff[i] -= ref.coeff[i];
        err.per_snapshot.push_back(l2_norm(diff));
    }
    err.sup = *std::max_element(err.per_snapshot.begin(), err.per_snapshot.end());
    return err;
}

std::vector<cplx> weak_pairings(const ViscousTrajectory& traj, const ExactShearFlow& exact,
                                std::span<const TestFunction> family) {
    check_match(traj, exact);
    const Grid2D& grid = exact.v3.grid;
    const int cut1 = grid.axis1.dealias_cutoff();
    const int cut2 = grid.axis2.dealias_cutoff();
    for (const TestFunction& phi : family)
        if (std::abs(phi.m1) > cut1 || std::abs(phi.m2) > cut2)
            throw std::invalid_argument("test-function mode beyond the grid band");

    const double T = traj.times.back();
    const std::vector<double> w = trapezoid_weights(traj.times);
    std::vector<cplx> pairings(family.size(), cplx{0.0, 0.0});
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        const Field2D ref = exact.u3_at(traj.times[j]);
        const Field2D& num = traj.u3_snapshots[j];
        for (std::size_t p = 0; p < family.size(); ++p) {
            const TestFunction& phi = family[p];
            // <f, e_m g(t)> = c_m(f) conj(g(t))
            const cplx diff = num.mode(phi.m1, phi.m2) - ref.mode(phi.m1, phi.m2);
            pairings[p] += w[j] * diff * std::conj(temporal_profile(phi, traj.times[j], T));
        }
    }
    return pairings;
}

cplx weak_pairing(const ViscousTrajectory& traj, const ExactShearFlow& exact,
                  const TestFunction& phi) {
    return weak_pairings(traj, exact, std::span<const TestFunction>(&phi, 1)).front();
}

std::vector<double> spatial_pairing_max(const ViscousTrajectory& traj,
                                        const ExactShearFlow& exact, int max_space_mode) {
    check_match(traj, exact);
    std::vector<double> out;
    out.reserve(traj.times.size());
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        const Field2D ref = exact.u3_at(traj.times[j]);
        const Field2D& num = traj.u3_snapshots[j];
        double best = 0.0;
        for (int m1 = -max_space_mode; m1 <= max_space_mode; ++m1)
            for (int m2 = -max_space_mode; m2 <= max_space_mode; ++m2)
                best = std::max(best, std::abs(num.mode(m1, m2) - ref.mode(m1, m2)));
        out.push_back(best);
    }
    return out;
}

AdmissibilityReport admissibility_check(std::span<const double> energy_ledger) {
    if (energy_ledger.empty()) throw std::invalid_argument("empty energy ledger");
    AdmissibilityReport rep;
    const double e0 = energy_ledger.front();
    double worst = -std::numeric_limits<double>::infinity();
    for (const double e : energy_ledger) worst = std::max(worst, e - e0);
    rep.max_violation = worst;
    rep.pass = worst <= 1e-12;
    return rep;
}

AdmissibilityReport admissibility_check(const ViscousTrajectory& traj) {
    return admissibility_check(std::span<const double>(traj.energy_ledger));
}

double euler_residual(const ExactShearFlow& exact, std::span<const TestFunction> family,
                      double T, int quad_steps) {
    if (quad_steps < 2) throw std::invalid_argument("quad_steps must be >= 2");
    const Grid2D& grid = exact.v3.grid;

    // v1 as physical samples along x2 for the product term
    const std::vector<double>& v1s = exact.v1_samples;

    const double h = T / quad_steps;
    double worst = 0.0;
    std::vector<cplx> integral(family.size(), cplx{0.0, 0.0});
    std::vector<cplx> boundary(family.size(), cplx{0.0, 0.0});
    for (int s = 0; s <= quad_steps; ++s) {
        const double t = s * h;
        const double w = (s == 0 || s == quad_steps) ? 0.5 * h : h;
        const Field2D u3 = exact.u3_at(t);
        // dealiased physical-space product v1(x2) * d1 u3
        const Field2D d1 = derivative(u3, 1, 1);
        std::vector<cplx> phys = to_physical(d1);
        const int n1 = grid.n1(), n2 = grid.n2();
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) phys[static_cast<std::size_t>(i) * n2 + j] *= v1s[j];
        const Field2D prod = dealias(to_spectral(std::span<const cplx>(phys), grid));

        for (std::size_t p = 0; p < family.size(); ++p) {
            const TestFunction& phi = family[p];
            const cplx g = temporal_profile(phi, t, T);
            const cplx gdot = temporal_profile_dot(phi, t, T);
            const cplx u3_m = u3.mode(phi.m1, phi.m2);
            const cplx prod_m = prod.mode(phi.m1, phi.m2);
            integral[p] += w * (-u3_m * std::conj(gdot) + prod_m * std::conj(g));
            if (s == 0) boundary[p] -= u3_m * std::conj(g);
            if (s == quad_steps) boundary[p] += u3_m * std::conj(g);
        }
    }
    for (std::size_t p = 0; p < family.size(); ++p)
        worst = std::max(worst, std::abs(boundary[p] + integral[p]));
    return worst;
}

RateFit fit_rate(std::span<const double> nus, std::span<const double> errors) {
    if (nus.size() != errors.size()) throw std::invalid_argument("size mismatch");
    if (nus.size() < 3) throw std::invalid_argument("need at least 3 (nu, error) pairs");
    const std::size_t n = nus.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (nus[i] <= 0.0 || errors[i] <= 0.0)
            throw std::invalid_argument("rate fit needs positive viscosities and errors");
        const double x = std::log(nus[i]);
        const double y = std::log(errors[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    RateFit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::log(errors[i]) - (fit.slope * std::log(nus[i]) + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace vvshear
