#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvshear/diagnostics.hpp"
#include "vvshear/exact.hpp"

using namespace vvshear;

namespace {
constexpr double pi = std::numbers::pi;

Field2D sine_x1(const Grid2D& g) {
    V3Spec spec;  // single_mode(1, 0, 1)
    return sample_v3(spec, g);
}
}  // namespace

TEST_CASE("shear flow evaluation equals pointwise substitution") {
    const Grid2D g(32, 32);
    const Field2D v3 = sine_x1(g);
    const auto v1 = sign_samples(g.axis2);
    const double t = 0.3;

    const Field2D moved = shear_flow_eval(v1, v3, t);
    const auto phys = to_physical(moved);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            const double want = std::sin(2.0 * pi * (g.axis1.point(i) - t * v1[j]));
            CHECK(std::abs(phys[static_cast<std::size_t>(i) * 32 + j] - cplx{want, 0.0}) < 1e-13);
        }
}

TEST_CASE("shear flow trivial cases") {
    const Grid2D g(32, 32);
    const auto v1 = sign_samples(g.axis2);

    // t = 0 is the identity
    const Field2D v3 = sine_x1(g);
    const Field2D same = shear_flow_eval(v1, v3, 0.0);
    for (std::size_t i = 0; i < v3.coeff.size(); ++i)
        CHECK(std::abs(same.coeff[i] - v3.coeff[i]) < 1e-15);

    // x2-only data has no x1 dependence to advect
    V3Spec spec;
    spec.kind = V3Spec::Kind::band_limited;
    spec.modes = {{0, 1, cplx{0.0, -0.5}}, {0, 3, cplx{0.2, 0.0}}};
    const Field2D w = sample_v3(spec, g);
    const Field2D wt = shear_flow_eval(v1, w, 1.7);
    for (std::size_t i = 0; i < w.coeff.size(); ++i)
        CHECK(std::abs(wt.coeff[i] - w.coeff[i]) < 1e-15);
}

TEST_CASE("transport semigroup, rigid translation, conservation") {
    const Grid2D g(32, 48);
    V3Spec spec;
    spec.kind = V3Spec::Kind::random_band_limited;
    spec.max_mode = 5;
    spec.seed = 3;
    const Field2D w0 = sample_v3(spec, g);
    const auto v1 = sign_samples(g.axis2);

    const Field2D two_hops = transport_evolve(transport_evolve(w0, v1, 0.15), v1, 0.65);
    const Field2D one_hop = transport_evolve(w0, v1, 0.8);
    for (std::size_t i = 0; i < w0.coeff.size(); ++i)
        CHECK(std::abs(two_hops.coeff[i] - one_hop.coeff[i]) < 1e-13);

    // constant velocity: w_m -> w_m e^{-2 pi i m c t}
    const double c = 0.37, t = 0.9;
    const std::vector<double> vc(g.n2(), c);
    const Field2D rigid = transport_evolve(w0, vc, t);
    for (int m = -5; m <= 5; ++m)
        for (int k2 = -5; k2 <= 5; ++k2) {
            const double theta = -2.0 * pi * m * c * t;
            const cplx want = w0.mode(m, k2) * cplx{std::cos(theta), std::sin(theta)};
            CHECK(std::abs(rigid.mode(m, k2) - want) < 1e-13);
        }

    CHECK(std::abs(l2_norm(transport_evolve(w0, v1, 2.3)) - l2_norm(w0)) < 1e-13);
}

TEST_CASE("heat semigroup") {
    const Grid1D g(64);
    const Field1D sq = square_wave_shear(g);

    // nu = 0 is the identity
    const Field1D same = heat_evolve(sq, 0.0, 5.0);
    for (int b = 0; b < g.n; ++b) CHECK(same.coeff[b] == sq.coeff[b]);

    // single mode decay factor, checked against the scalar oracle and the
    // quoted value
    Field1D s(g, true);
    s.set_conjugate_pair(1, cplx{0.0, -0.5});  // sin(2 pi x2)
    const Field1D evolved = heat_evolve(s, 0.01, 1.0);
    const double oracle = std::exp(-4.0 * pi * pi * 0.01 * 1.0);
    CHECK(oracle == doctest::Approx(0.67383).epsilon(1e-5));
    CHECK(std::abs(evolved.mode(1) - cplx{0.0, -0.5 * oracle}) < 1e-15);

    // constants are fixed points
    Field1D c(g);
    c.mode(0) = 4.2;
    const Field1D cv = heat_evolve(c, 0.3, 2.0);
    CHECK(cv.mode(0) == cplx{4.2, 0.0});

    CHECK_THROWS_AS(heat_evolve(s, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(heat_evolve(s, 0.1, -1.0), std::invalid_argument);

    // dissipation: the norm is strictly decreasing for nu > 0
    double prev = l2_norm(sq);
    for (double t : {0.01, 0.1, 0.5, 2.0}) {
        const double now = l2_norm(heat_evolve(sq, 1e-2, t));
        CHECK(now < prev);
        prev = now;
    }

    // semigroup law to round-off
    const Field1D ab = heat_evolve(heat_evolve(sq, 3e-3, 0.4), 3e-3, 0.9);
    const Field1D once = heat_evolve(sq, 3e-3, 1.3);
    for (int b = 0; b < g.n; ++b) CHECK(std::abs(ab.coeff[b] - once.coeff[b]) < 1e-15);
}

TEST_CASE("heat limit error") {
    CHECK(heat_limit_error(0.0, 1.0, 10001) == 0.0);
    CHECK(heat_limit_error(1e-2, 0.0, 10001) == 0.0);
    CHECK_THROWS_AS(heat_limit_error(-1.0, 1.0, 101), std::invalid_argument);
    CHECK_THROWS_AS(heat_limit_error(1e-2, 1.0, 0), std::invalid_argument);

    // (nu t)^{1/4} scaling of the regularized jump: log-log slope vs nu
    const std::vector<double> nus = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<double> errs;
    for (double nu : nus) errs.push_back(heat_limit_error(nu, 1.0, 10001));
    const RateFit fit = fit_rate(nus, errs);
    CHECK(fit.slope > 0.22);
    CHECK(fit.slope < 0.28);

    // grid overload uses the dealias cutoff
    const Grid1D g(64);
    CHECK(heat_limit_error(1e-2, 1.0, g) == heat_limit_error(1e-2, 1.0, 21));
}

TEST_CASE("exact heat evolution of the untruncated square wave") {
    const Grid1D g(32);

    // nu t = 0 reproduces the sign samples, zero at the jumps
    const auto s0 = heat_square_wave_samples(0.0, 1.0, g);
    const auto sgn = sign_samples(g);
    for (int j = 0; j < g.n; ++j) CHECK(s0[j] == sgn[j]);
    CHECK(sgn[0] == 0.0);          // x = -1/2
    CHECK(sgn[g.n / 2] == 0.0);    // x = 0
    CHECK(sgn[g.n / 2 + 1] == 1.0);
    CHECK(sgn[1] == -1.0);

    // brute-force oracle: direct sine-series summation, no folding
    for (const auto [nu, t] : {std::pair{1e-3, 0.01}, {0.1, 0.3}, {1e-5, 0.05}}) {
        const auto fast = heat_square_wave_samples(nu, t, g);
        for (int j = 0; j < g.n; ++j) {
            double brute = 0.0;
            const double x = g.point(j);
            for (long long k = 1; k <= 4'000'001; k += 2) {
                const double amp =
                    (4.0 / (pi * k)) * std::exp(-nu * 4.0 * pi * pi * k * static_cast<double>(k) * t);
                if (amp < 1e-19 && k > g.n) break;
                brute += amp * std::sin(2.0 * pi * k * x);
            }
            CHECK(fast[j] == doctest::Approx(brute).epsilon(1e-11));
        }
    }
}

TEST_CASE("make_exact_flow realizations") {
    const Grid2D g(32, 32);
    ShearDatum datum;  // square wave, sin(2 pi x1)

    const ExactShearFlow pw = make_exact_flow(datum, g, VelocityMode::pointwise_sign);
    CHECK(pw.v1_samples == sign_samples(g.axis2));

    const ExactShearFlow ts = make_exact_flow(datum, g, VelocityMode::truncated_series);
    const auto proj = to_physical_real(square_wave_shear(g.axis2));
    for (int j = 0; j < g.n2(); ++j) CHECK(ts.v1_samples[j] == doctest::Approx(proj[j]));

    ShearDatum smooth;
    smooth.v1.kind = V1Spec::Kind::band_limited;
    smooth.v1.modes = {{1, cplx{0.0, -0.5}}};
    CHECK_THROWS_AS(make_exact_flow(smooth, g, VelocityMode::pointwise_sign),
                    std::invalid_argument);
}
