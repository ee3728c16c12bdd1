#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "vvshear/spectral.hpp"

// Shear-type initial data v0(x) = (v1(x2), 0, v3(x1, x2)).

namespace vvshear {

struct V1Spec {
    enum class Kind { square_wave, band_limited, samples };
    Kind kind = Kind::square_wave;
    std::vector<std::pair<int, cplx>> modes;  // band_limited: (k, amplitude), conjugate pair implied
    std::vector<double> samples;              // samples: per-collocation values
};

struct V3Spec {
    enum class Kind { single_mode, band_limited, periodized_bump, random_band_limited };
    Kind kind = Kind::single_mode;

    // single_mode: amplitude * sin(2 pi (m1 x1 + m2 x2))
    int m1 = 1;
    int m2 = 0;
    double amplitude = 1.0;

    // band_limited: (k1, k2, amplitude) entries, conjugate pairs implied
    std::vector<std::tuple<int, int, cplx>> modes;

    // periodized_bump: product of two compactly supported 1D bumps
    double center1 = 0.0;
    double center2 = 0.0;
    double width = 0.25;

    // random_band_limited
    int max_mode = 4;
    std::uint64_t seed = 0;
};

struct ShearDatum {
    V1Spec v1;
    V3Spec v3;
};

/// Spectral projection of the square wave sign(x2) (+1 on (0,1/2), -1 on
/// (-1/2,0)): sine coefficients 4/(pi k) for odd k, truncated at the dealias
/// cutoff n/3.
Field1D square_wave_shear(const Grid1D& grid);

/// Realize a v1 spec on the grid.
Field1D sample_v1(const V1Spec& spec, const Grid1D& grid);

/// Realize a v3 spec on the grid. Band-limited kinds must fit inside the
/// dealias band; random_band_limited is deterministic in the seed
/// (mt19937_64 driving a Box-Muller normal, fixed mode order).
Field2D sample_v3(const V3Spec& spec, const Grid2D& grid);

/// Kinetic energy of the datum's discrete projection:
/// (1/2)(|v1|_{L2(T)}^2 + |v3|_{L2(T^2)}^2); the second component is zero.
double initial_energy(const ShearDatum& datum, const Grid1D& shear_grid, const Grid2D& grid);
double initial_energy(const Field1D& v1, const Field2D& v3);

/// The 1D bump profile used by periodized_bump: exp(1 - 1/(1-u^2)) on |u|<1
/// with u = 2 wrap(x - center)/width, zero outside. Peak value 1.
double bump_profile(double x, double center, double width);

}  // namespace vvshear
