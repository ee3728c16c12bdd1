#include "vvshear/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "vvshear/diagnostics.hpp"
#include "vvshear/exact.hpp"
#include "vvshear/harness.hpp"
#include "vvshear/initial_data.hpp"
#include "vvshear/solver.hpp"

namespace vvshear {

namespace {

constexpr double pi = std::numbers::pi;

CheckResult make_result(const std::string& name, double worst, double threshold) {
    CheckResult r;
    r.name = name;
    r.pass = worst <= threshold;
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "worst=" << worst << " thr=" << threshold;
    r.detail = os.str();
    return r;
}

std::vector<double> random_samples(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

CheckResult check_roundtrip(const std::vector<int>& sizes) {
    double worst = 0.0;
    for (int n : sizes) {
        const Grid1D grid(n);
        const auto samples = random_samples(n, 17u + n);
        const auto back = to_physical(to_spectral(std::span<const double>(samples), grid));
        double scale = 0.0, err = 0.0;
        for (int j = 0; j < n; ++j) {
            scale = std::max(scale, std::abs(samples[j]));
            err = std::max(err, std::abs(back[j] - cplx{samples[j], 0.0}));
        }
        worst = std::max(worst, err / scale);
    }
    return make_result("round-trip identity", worst, 1e-12);
}

CheckResult check_parseval(const std::vector<int>& sizes) {
    double worst = 0.0;
    for (int n : sizes) {
        const Grid1D grid(n);
        const auto samples = random_samples(n, 29u + n);
        const Field1D f = to_spectral(std::span<const double>(samples), grid);
        double phys = 0.0;
        for (double s : samples) phys += s * s;
        phys /= n;
        double spec = 0.0;
        for (const cplx& c : f.coeff) spec += std::norm(c);
        worst = std::max(worst, std::abs(spec - phys) / phys);
    }
    return make_result("Parseval identity", worst, 1e-12);
}

CheckResult check_derivative(const std::vector<int>& sizes) {
    double worst = 0.0;
    for (int n : sizes) {
        const Grid1D grid(n);
        Field1D f(grid, true);
        f.set_conjugate_pair(1, cplx{0.0, -0.5});  // sin(2 pi x)
        const Field1D d1 = derivative(f, 1);
        // expect 2 pi cos(2 pi x): c_1 = c_-1 = pi
        double err = std::abs(d1.mode(1) - cplx{pi, 0.0});
        err = std::max(err, std::abs(d1.mode(-1) - cplx{pi, 0.0}));
        Field1D g(grid, true);
        g.set_conjugate_pair(2, cplx{0.0, -0.5});  // sin(4 pi x)
        const Field1D d2 = derivative(g, 2);
        err = std::max(err, std::abs(d2.mode(2) - cplx{0.0, 8.0 * pi * pi}) / (16.0 * pi * pi));
        worst = std::max(worst, err);
    }
    return make_result("derivative eigenvalues", worst, 1e-12);
}

CheckResult check_dealias(const std::vector<int>& sizes) {
    double worst = 0.0;
    for (int n : sizes) {
        const Grid1D grid(n);
        const int cut = grid.dealias_cutoff();
        Field1D f(grid);
        for (int b = 0; b < n; ++b) f.coeff[b] = cplx{1.0, 0.5};
        const Field1D g = dealias(f);
        for (int b = 0; b < n; ++b) {
            const int k = grid.wavenumber(b);
            const double want = std::abs(k) > cut ? 0.0 : 1.0;
            worst = std::max(worst, std::abs(std::abs(g.coeff[b] / cplx{1.0, 0.5}) - want));
        }
    }
    return make_result("dealias band (2/3 rule)", worst, 0.0);
}

CheckResult check_transport(const Grid2D& grid) {
    V3Spec spec;
    spec.kind = V3Spec::Kind::random_band_limited;
    spec.max_mode = std::min(3, grid.axis1.dealias_cutoff());
    spec.seed = 11;
    const Field2D w0 = sample_v3(spec, grid);
    const auto v1 = sign_samples(grid.axis2);

    const Field2D a = transport_evolve(transport_evolve(w0, v1, 0.2), v1, 0.35);
    const Field2D b = transport_evolve(w0, v1, 0.55);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        worst = std::max(worst, std::abs(a.coeff[i] - b.coeff[i]));
    const double norm_drift = std::abs(l2_norm(b) - l2_norm(w0));
    return make_result("transport semigroup + L2 conservation",
                       std::max(worst, norm_drift), 1e-13);
}

CheckResult check_two_route_transport(const Grid2D& grid) {
    // constant shear: phase rotation must equal pointwise substitution
    V3Spec spec;
    spec.kind = V3Spec::Kind::band_limited;
    spec.modes = {{1, 0, cplx{0.0, -0.5}}, {2, 1, cplx{0.25, 0.1}}};
    const Field2D w0 = sample_v3(spec, grid);
    const double c = 0.7, t = 0.42;
    const std::vector<double> v1(grid.n2(), c);
    const Field2D rotated = transport_evolve(w0, v1, t);

    // independent route: sample w0(x1 - c t, x2) directly
    const int n1 = grid.n1(), n2 = grid.n2();
    std::vector<cplx> shifted(grid.size());
    for (int i = 0; i < n1; ++i) {
        const double x1 = grid.axis1.point(i) - c * t;
        for (int j = 0; j < n2; ++j) {
            const double x2 = grid.axis2.point(j);
            cplx val{0.0, 0.0};
            for (const auto& [k1, k2, a] : spec.modes) {
                const double th = 2.0 * pi * (k1 * x1 + k2 * x2);
                val += a * cplx{std::cos(th), std::sin(th)};
                const double th2 = -th;
                val += std::conj(a) * cplx{std::cos(th2), std::sin(th2)};
            }
            shifted[static_cast<std::size_t>(i) * n2 + j] = val;
        }
    }
    const Field2D direct = to_spectral(std::span<const cplx>(shifted), grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.coeff.size(); ++i)
        worst = std::max(worst, std::abs(direct.coeff[i] - rotated.coeff[i]));
    return make_result("transport two-route agreement", worst, 1e-12);
}

CheckResult check_energy(const Grid1D& shear_grid, const Grid2D& grid) {
    ShearDatum datum;  // square wave + sin(2 pi x1)
    SolverConfig sc;
    sc.dt = 1e-3;
    sc.T = 0.05;
    sc.snapshot_stride = 5;

    const ViscousTrajectory visc = solve(datum, 1e-2, sc, shear_grid, grid);
    const AdmissibilityReport adm = admissibility_check(visc);
    double worst = adm.max_violation;

    const ViscousTrajectory inviscid = solve(datum, 0.0, sc, shear_grid, grid);
    for (const double e : inviscid.energy_ledger)
        worst = std::max(worst, std::abs(e - inviscid.energy_ledger.front()));
    return make_result("energy: dissipation + inviscid conservation", worst, 1e-13);
}

CheckResult check_mean_preservation(const Grid1D& shear_grid, const Grid2D& grid) {
    ShearDatum datum;
    datum.v3.kind = V3Spec::Kind::band_limited;
    const int m = std::min(2, grid.axis1.dealias_cutoff());
    datum.v3.modes = {{0, 0, cplx{0.3, 0.0}}, {1, 0, cplx{0.0, -0.5}}, {m, m, cplx{0.1, 0.05}}};
    SolverConfig sc;
    sc.dt = 1e-3;
    sc.T = 0.05;
    sc.snapshot_stride = 10;
    const ViscousTrajectory traj = solve(datum, 5e-3, sc, shear_grid, grid);
    double worst = 0.0;
    for (const Field2D& u3 : traj.u3_snapshots)
        worst = std::max(worst, std::abs(u3.mode(0, 0) - cplx{0.3, 0.0}));
    return make_result("mean (0,0)-mode preservation", worst, 1e-14);
}

CheckResult check_decoupling(const Grid1D& shear_grid, const Grid2D& grid) {
    ShearDatum full;
    full.v3.kind = V3Spec::Kind::random_band_limited;
    full.v3.max_mode = std::min(3, grid.axis1.dealias_cutoff());
    full.v3.seed = 5;

    SolverConfig sc;
    sc.dt = 1e-3;
    sc.T = 0.03;
    sc.snapshot_stride = 30;
    const double nu = 1e-2;
    const int m0 = 2;

    const ViscousTrajectory whole = solve(full, nu, sc, shear_grid, grid);

    // zero every x1-mode except m0 before solving
    Field2D filtered = sample_v3(full.v3, grid);
    for (int b1 = 0; b1 < grid.n1(); ++b1) {
        const int m = grid.axis1.wavenumber(b1);
        if (m != m0 && m != -m0)
            for (int b2 = 0; b2 < grid.n2(); ++b2)
                filtered.coeff[static_cast<std::size_t>(b1) * grid.n2() + b2] = 0.0;
    }
    // run the filtered datum through the same stepper
    const ShearVelocity vel(full.v1, grid.axis2, nu, VelocityMode::pointwise_sign);
    Field2D u3 = filtered;
    const long long nsteps = sc.step_count();
    for (long long s = 0; s < nsteps; ++s) u3 = strang_step(u3, s * sc.dt, nu, sc.dt, vel);

    double worst = 0.0;
    const Field2D& final_full = whole.u3_snapshots.back();
    for (int b1 = 0; b1 < grid.n1(); ++b1) {
        const int m = grid.axis1.wavenumber(b1);
        for (int b2 = 0; b2 < grid.n2(); ++b2) {
            const std::size_t idx = static_cast<std::size_t>(b1) * grid.n2() + b2;
            const cplx want = (m == m0 || m == -m0) ? final_full.coeff[idx] : cplx{0.0, 0.0};
            worst = std::max(worst, std::abs(u3.coeff[idx] - want));
        }
    }
    return make_result("x1-mode decoupling", worst, 1e-12);
}

CheckResult check_divergence_free(const Grid2D& grid) {
    // the shear ansatz makes the velocity divergence-free structurally:
    // u1 depends on x2 only, u2 = 0, u3 carries no x3 dependence. The
    // discrete residual d1 u1 + d2 u2 must vanish to the last bit.
    ShearDatum datum;
    SolverConfig sc;
    sc.dt = 1e-3;
    sc.T = 0.02;
    sc.snapshot_stride = 10;
    const ViscousTrajectory traj = solve(datum, 1e-2, sc, grid.axis2, grid);

    double worst = 0.0;
    for (const Field1D& u1 : traj.u1_snapshots) {
        Field2D embedded(grid);  // u1(x2) as a 2D field: modes (0, k2) only
        for (int b2 = 0; b2 < grid.n2(); ++b2) {
            const int k2 = grid.axis2.wavenumber(b2);
            embedded.mode(0, k2) = u1.mode(k2);
        }
        const Field2D div = derivative(embedded, 1, 1);  // + d2 of u2 = 0
        for (const cplx& c : div.coeff) worst = std::max(worst, std::abs(c));
    }
    return make_result("discrete divergence of the shear ansatz", worst, 0.0);
}

CheckResult check_square_wave(const Grid1D& grid) {
    const Field1D f = square_wave_shear(grid);
    double worst = std::abs(f.mode(0));
    for (int b = 0; b < grid.n; ++b) {
        const int k = grid.wavenumber(b);
        // odd symmetry: coefficients purely imaginary, even harmonics vanish
        worst = std::max(worst, std::abs(f.coeff[b].real()));
        if (k != 0 && k % 2 == 0) worst = std::max(worst, std::abs(f.coeff[b]));
    }
    const double e = 0.5 * l2_norm(f) * l2_norm(f);
    if (e > 0.5) worst = std::max(worst, e - 0.5);  // Bessel bound
    return make_result("square-wave projection oddness + Bessel", worst, 1e-14);
}

CheckResult check_random_determinism(const Grid2D& grid) {
    V3Spec spec;
    spec.kind = V3Spec::Kind::random_band_limited;
    spec.max_mode = std::min(4, grid.axis1.dealias_cutoff());
    spec.seed = 7;
    const Field2D a = sample_v3(spec, grid);
    const Field2D b = sample_v3(spec, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        worst = std::max(worst, std::abs(a.coeff[i] - b.coeff[i]));
    // conjugate symmetry of the realization
    for (int k1 = -spec.max_mode; k1 <= spec.max_mode; ++k1)
        for (int k2 = -spec.max_mode; k2 <= spec.max_mode; ++k2)
            worst = std::max(worst, std::abs(a.mode(k1, k2) - std::conj(a.mode(-k1, -k2))));
    return make_result("random datum determinism + conjugate symmetry", worst, 1e-14);
}

}  // namespace

CheckResult check_heat_semigroup(const HeatEvolver& evolve, int n) {
    const Grid1D grid(n);
    const Field1D u0 = square_wave_shear(grid);
    const double nu = 3e-3, t1 = 0.4, t2 = 0.9;
    const Field1D once = evolve(u0, nu, t1 + t2);
    const Field1D twice = evolve(evolve(u0, nu, t1), nu, t2);
    double worst = 0.0;
    for (int b = 0; b < n; ++b) worst = std::max(worst, std::abs(once.coeff[b] - twice.coeff[b]));
    // the semigroup must also contract: any sign slip in the multiplier
    // shows up here even though exponents still add up
    worst = std::max(worst, l2_norm(once) - l2_norm(u0));
    worst = std::max(worst, l2_norm(evolve(u0, nu, t1)) - l2_norm(u0));
    return make_result("heat semigroup law + contraction", worst, 1e-13);
}

std::vector<int> verification_grid_sizes(int max_size) {
    std::vector<int> sizes;
    for (int n = 8; n <= max_size; n *= 2) sizes.push_back(n);
    if (max_size >= 12) sizes.push_back(12);
    if (max_size >= 48) sizes.push_back(48);
    if (max_size >= 96) sizes.push_back(96);
    return sizes;
}

std::vector<CheckResult> run_verification_suite(int max_size) {
    const std::vector<int> sizes = verification_grid_sizes(max_size);
    // solver-level checks run at small sizes, clamped so the whole suite
    // still works on the minimal n = 8 grids
    const Grid1D shear_small(std::min(64, max_size));
    const Grid2D grid_small(std::min(32, max_size), std::min(32, max_size));

    std::vector<CheckResult> results;
    results.push_back(check_roundtrip(sizes));
    results.push_back(check_parseval(sizes));
    results.push_back(check_derivative(sizes));
    results.push_back(check_dealias(sizes));
    results.push_back(check_heat_semigroup(
        [](const Field1D& f, double nu, double t) { return heat_evolve(f, nu, t); },
        std::min(64, max_size)));
    results.push_back(check_transport(grid_small));
    results.push_back(check_two_route_transport(grid_small));
    results.push_back(check_energy(shear_small, grid_small));
    results.push_back(check_mean_preservation(shear_small, grid_small));
    results.push_back(check_decoupling(shear_small, grid_small));
    results.push_back(check_divergence_free(grid_small));
    results.push_back(check_square_wave(Grid1D(std::min(64, max_size))));
    results.push_back(check_random_determinism(grid_small));
    return results;
}

}  // namespace vvshear
