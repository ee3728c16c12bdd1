#include "vvshear/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace vvshear {

namespace {

constexpr double pi = std::numbers::pi;

// Wrap to the fundamental period (-1/2, 1/2].
double wrap(double x) {
    double y = x - std::floor(x + 0.5);
    if (y <= -0.5) y += 1.0;
    return y;
}

// Deterministic standard normal: Box-Muller on mt19937_64 uniforms.
// Fully specified so two builds of this artifact agree bit-for-bit.
class NormalSource {
public:
    explicit NormalSource(std::uint64_t seed) : rng_(seed) {}
    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * pi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * pi * u2);
    }

private:
    double uniform01() {
        // (0, 1]: never zero, so log() is safe
        return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    }
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

double bump_profile(double x, double center, double width) {
    const double u = 2.0 * wrap(x - center) / width;
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

Field1D square_wave_shear(const Grid1D& grid) {
    Field1D f(grid, true);
    const int cutoff = grid.dealias_cutoff();
    for (int k = 1; k <= cutoff; k += 2) {
        // b_k = 4/(pi k) sine coefficient  <=>  c_k = -2i/(pi k)
        f.set_conjugate_pair(k, cplx{0.0, -2.0 / (pi * k)});
    }
    return f;
}

Field1D sample_v1(const V1Spec& spec, const Grid1D& grid) {
    switch (spec.kind) {
        case V1Spec::Kind::square_wave:
            return square_wave_shear(grid);
        case V1Spec::Kind::band_limited: {
            Field1D f(grid, true);
            const int cutoff = grid.dealias_cutoff();
            for (const auto& [k, a] : spec.modes) {
                if (std::abs(k) > cutoff)
                    throw std::invalid_argument("v1 mode beyond dealias cutoff");
                f.set_conjugate_pair(k, a);
            }
            return f;
        }
        case V1Spec::Kind::samples: {
            if (static_cast<int>(spec.samples.size()) != grid.n)
                throw std::invalid_argument("v1 sample count does not match grid");
            return to_spectral(std::span<const double>(spec.samples), grid);
        }
    }
    throw std::logic_error("unreachable");
}

Field2D sample_v3(const V3Spec& spec, const Grid2D& grid) {
    const int cut1 = grid.axis1.dealias_cutoff();
    const int cut2 = grid.axis2.dealias_cutoff();
    switch (spec.kind) {
        case V3Spec::Kind::single_mode: {
            if (std::abs(spec.m1) > cut1 || std::abs(spec.m2) > cut2)
                throw std::invalid_argument("v3 mode beyond dealias cutoff");
            Field2D f(grid, true);
            // A sin(2 pi (m1 x1 + m2 x2)) = A/(2i) e_+ - A/(2i) e_-
            f.set_conjugate_pair(spec.m1, spec.m2, cplx{0.0, -0.5 * spec.amplitude});
            return f;
        }
        case V3Spec::Kind::band_limited: {
            Field2D f(grid, true);
            for (const auto& [k1, k2, a] : spec.modes) {
                if (std::abs(k1) > cut1 || std::abs(k2) > cut2)
                    throw std::invalid_argument("v3 mode beyond dealias cutoff");
                f.set_conjugate_pair(k1, k2, a);
            }
            return f;
        }
        case V3Spec::Kind::periodized_bump: {
            const int n1 = grid.n1(), n2 = grid.n2();
            std::vector<double> samples(grid.size());
            for (int i = 0; i < n1; ++i) {
                const double b1 = bump_profile(grid.axis1.point(i), spec.center1, spec.width);
                for (int j = 0; j < n2; ++j)
                    samples[static_cast<std::size_t>(i) * n2 + j] =
                        b1 * bump_profile(grid.axis2.point(j), spec.center2, spec.width);
            }
            return to_spectral(std::span<const double>(samples), grid);
        }
        case V3Spec::Kind::random_band_limited: {
            if (spec.max_mode < 1) throw std::invalid_argument("max_mode must be >= 1");
            if (spec.max_mode > cut1 || spec.max_mode > cut2)
                throw std::invalid_argument("v3 mode beyond dealias cutoff");
            Field2D f(grid, true);
            NormalSource normal(spec.seed);
            const int M = spec.max_mode;
            // Fixed iteration order over one half-space; conjugate partner implied.
            for (int k1 = 0; k1 <= M; ++k1) {
                for (int k2 = -M; k2 <= M; ++k2) {
                    if (k1 == 0 && k2 <= 0) continue;
                    const cplx a{normal.next(), normal.next()};
                    f.set_conjugate_pair(k1, k2, spec.amplitude * a);
                }
            }
            return f;
        }
    }
    throw std::logic_error("unreachable");
}

double initial_energy(const Field1D& v1, const Field2D& v3) {
    const double n1 = l2_norm(v1);
    const double n3 = l2_norm(v3);
    return 0.5 * (n1 * n1 + n3 * n3);
}

double initial_energy(const ShearDatum& datum, const Grid1D& shear_grid, const Grid2D& grid) {
    return initial_energy(sample_v1(datum.v1, shear_grid), sample_v3(datum.v3, grid));
}

}  // namespace vvshear
