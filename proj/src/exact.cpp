#include "vvshear/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vvshear {

namespace {
constexpr double pi = std::numbers::pi;

void check_nonnegative(double nu, double t) {
    if (nu < 0.0) throw std::invalid_argument("viscosity must be nonnegative");
    if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
}
}  // namespace

std::vector<double> sign_samples(const Grid1D& grid) {
    std::vector<double> s(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.point(j);
        if (x == 0.0 || x == -0.5) {
            s[j] = 0.0;  // jump points, any bounded value is L2-equivalent
        } else {
            s[j] = (x > 0.0) ? 1.0 : -1.0;
        }
    }
    return s;
}

std::vector<double> heat_square_wave_samples(double nu, double t, const Grid1D& grid) {
    check_nonnegative(nu, t);
    if (nu * t == 0.0) return sign_samples(grid);

    const double a = nu * 4.0 * pi * pi * t;
    // Sum sin modes until 4/(pi k) e^{-a k^2} drops below round-off; at
    // least past the grid so the fold is exercised.
    long long kmax = grid.n + 1;
    while (kmax < 20'000'000 && (4.0 / (pi * kmax)) * std::exp(-a * static_cast<double>(kmax) * kmax) > 1e-18)
        kmax += 2;

    // Fold every mode onto its alias bin: sin(2 pi k x_j) with
    // x_j = -1/2 + j/n equals -Im e^{2 pi i (k mod n) j / n} for odd k.
    Field1D folded(grid);
    for (long long k = 1; k <= kmax; k += 2) {
        const double amp = (4.0 / (pi * k)) * std::exp(-a * static_cast<double>(k) * k);
        const int bp = static_cast<int>(k % grid.n);
        const int bm = static_cast<int>((grid.n - bp) % grid.n);
        // -amp/(2i) e^{+} + amp/(2i) e^{-}
        folded.coeff[bp] += cplx{0.0, amp * 0.5};
        folded.coeff[bm] -= cplx{0.0, amp * 0.5};
    }
    // folded holds plain-DFT coefficients (no collocation phase); undo the
    // (-1)^bin fold that to_physical applies.
    for (int b = 0; b < grid.n; ++b)
        if (b & 1) folded.coeff[b] = -folded.coeff[b];
    std::vector<cplx> phys = to_physical(folded);
    std::vector<double> out(grid.n);
    for (int j = 0; j < grid.n; ++j) out[j] = phys[j].real();
    return out;
}

Field2D shear_flow_eval(std::span<const double> v1_samples, const Field2D& v3, double t) {
    const int n1 = v3.grid.n1(), n2 = v3.grid.n2();
    if (static_cast<int>(v1_samples.size()) != n2)
        throw std::invalid_argument("v1 samples must match the x2 collocation grid");
    std::vector<cplx> w = to_mixed(v3);
    for (int b1 = 0; b1 < n1; ++b1) {
        const int m = v3.grid.axis1.wavenumber(b1);
        if (m == 0) continue;
        cplx* row = w.data() + static_cast<std::size_t>(b1) * n2;
        for (int j = 0; j < n2; ++j) {
            const double theta = -2.0 * pi * m * v1_samples[j] * t;
            row[j] *= cplx{std::cos(theta), std::sin(theta)};
        }
    }
    return from_mixed(w, v3.grid, v3.real_valued);
}

Field2D transport_evolve(const Field2D& w0, std::span<const double> v1_samples, double t) {
    return shear_flow_eval(v1_samples, w0, t);
}

Field1D heat_evolve(const Field1D& u0, double nu, double t) {
    check_nonnegative(nu, t);
    Field1D out = u0;
    const double a = nu * 4.0 * pi * pi * t;
    for (int b = 0; b < u0.grid.n; ++b) {
        const double k = u0.grid.wavenumber(b);
        out.coeff[b] *= std::exp(-a * k * k);
    }
    return out;
}

double heat_limit_error(double nu, double t, int max_sine_mode) {
    check_nonnegative(nu, t);
    if (max_sine_mode < 1) throw std::invalid_argument("mode limit must be >= 1");
    double sum = 0.0;
    for (int k = 1; k <= max_sine_mode; k += 2) {
        const double b = 4.0 / (pi * k);
        const double decay = 1.0 - std::exp(-nu * 4.0 * pi * pi * k * static_cast<double>(k) * t);
        sum += 0.5 * b * b * decay * decay;  // |b_k sin|^2_{L2} = b_k^2 / 2
    }
    return std::sqrt(sum);
}

double heat_limit_error(double nu, double t, const Grid1D& grid) {
    return heat_limit_error(nu, t, grid.dealias_cutoff());
}

ExactShearFlow make_exact_flow(const ShearDatum& datum, const Grid2D& grid,
                               VelocityMode mode) {
    ExactShearFlow flow;
    flow.v1 = sample_v1(datum.v1, grid.axis2);
    if (mode == VelocityMode::pointwise_sign) {
        if (datum.v1.kind != V1Spec::Kind::square_wave)
            throw std::invalid_argument("pointwise_sign velocity requires the square-wave datum");
        flow.v1_samples = sign_samples(grid.axis2);
    } else {
        flow.v1_samples = to_physical_real(flow.v1);
    }
    flow.v3 = sample_v3(datum.v3, grid);
    return flow;
}

}  // namespace vvshear
