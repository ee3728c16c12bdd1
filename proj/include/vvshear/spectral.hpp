#pragma once

#include <complex>
#include <span>
#include <vector>

// Spectral representation of periodic fields on the unit torus (-1/2,1/2)^d.
//
// Convention: f(x) = sum_k c_k e^{2 pi i k.x} with integer wavenumbers k.
// Collocation points are x_j = -1/2 + j/n, so the discrete transform picks up
// a (-1)^k phase relative to the standard DFT; all routines here fold that
// phase in so that coefficients always refer to the continuous convention.

namespace vvshear {

using cplx = std::complex<double>;

/// 1D periodic grid with n equispaced points on (-1/2, 1/2).
/// n must be even and >= 8; wavenumbers run over {-n/2+1, ..., n/2}.
struct Grid1D {
    int n = 0;

    Grid1D() = default;
    explicit Grid1D(int n_points);

    double point(int j) const { return -0.5 + static_cast<double>(j) / n; }
    std::vector<double> points() const;

    /// DFT bin -> signed wavenumber (Nyquist bin maps to +n/2).
    int wavenumber(int bin) const { return bin <= n / 2 ? bin : bin - n; }
    /// Signed wavenumber -> DFT bin.
    int bin(int k) const { return ((k % n) + n) % n; }
    /// 2/3-rule cutoff: modes with |k| > cutoff are dropped by dealias().
    int dealias_cutoff() const { return n / 3; }

    bool operator==(const Grid1D&) const = default;
};

/// Tensor-product grid; axis 1 <-> x1, axis 2 <-> x2.
struct Grid2D {
    Grid1D axis1;
    Grid1D axis2;

    Grid2D() = default;
    Grid2D(int n1, int n2) : axis1(n1), axis2(n2) {}

    int n1() const { return axis1.n; }
    int n2() const { return axis2.n; }
    std::size_t size() const { return static_cast<std::size_t>(axis1.n) * axis2.n; }

    bool operator==(const Grid2D&) const = default;
};

/// Scalar field on T^1 stored as Fourier coefficients in DFT-bin order.
struct Field1D {
    Grid1D grid;
    std::vector<cplx> coeff;      // coeff[bin], bin in [0, n)
    bool real_valued = false;     // if set, c_{-k} = conj(c_k)

    Field1D() = default;
    explicit Field1D(const Grid1D& g, bool real = false)
        : grid(g), coeff(g.n, cplx{0.0, 0.0}), real_valued(real) {}

    cplx& mode(int k) { return coeff[grid.bin(k)]; }
    const cplx& mode(int k) const { return coeff[grid.bin(k)]; }

    /// Sets c_k = a and c_{-k} = conj(a); keeps the field real.
    void set_conjugate_pair(int k, cplx a);
};

/// Scalar field on T^2, coefficients row-major: coeff[bin1 * n2 + bin2].
struct Field2D {
    Grid2D grid;
    std::vector<cplx> coeff;
    bool real_valued = false;

    Field2D() = default;
    explicit Field2D(const Grid2D& g, bool real = false)
        : grid(g), coeff(g.size(), cplx{0.0, 0.0}), real_valued(real) {}

    cplx& mode(int k1, int k2) {
        return coeff[static_cast<std::size_t>(grid.axis1.bin(k1)) * grid.n2() + grid.axis2.bin(k2)];
    }
    const cplx& mode(int k1, int k2) const {
        return coeff[static_cast<std::size_t>(grid.axis1.bin(k1)) * grid.n2() + grid.axis2.bin(k2)];
    }

    void set_conjugate_pair(int k1, int k2, cplx a);
};

// ---- transforms ------------------------------------------------------------

Field1D to_spectral(std::span<const double> samples, const Grid1D& grid);
Field1D to_spectral(std::span<const cplx> samples, const Grid1D& grid);
Field2D to_spectral(std::span<const double> samples, const Grid2D& grid);
Field2D to_spectral(std::span<const cplx> samples, const Grid2D& grid);

std::vector<cplx> to_physical(const Field1D& f);
std::vector<cplx> to_physical(const Field2D& f);
/// Physical samples of a field with the real_valued flag set; the imaginary
/// parts (guaranteed round-off level) are dropped.
std::vector<double> to_physical_real(const Field1D& f);
std::vector<double> to_physical_real(const Field2D& f);

// ---- mixed representation (spectral in x1, physical in x2) -----------------
// Layout w[bin1 * n2 + j]: the x1-mode line m = wavenumber(bin1) sampled at
// the x2 collocation points. This is the natural frame for shear transport.

std::vector<cplx> to_mixed(const Field2D& f);
Field2D from_mixed(std::span<const cplx> w, const Grid2D& grid, bool real_valued);

// ---- calculus and projections ----------------------------------------------

/// Spectral derivative c_k -> (2 pi i k)^order c_k. order in {1, 2};
/// the Nyquist mode is zeroed for order 1 (its sign is not represented).
Field1D derivative(const Field1D& f, int order);
/// Same along the given axis (1 or 2) of a 2D field.
Field2D derivative(const Field2D& f, int axis, int order);

/// 2/3-rule projection: zero every mode with |k| > n/3 (per axis in 2D).
Field1D dealias(const Field1D& f);
Field2D dealias(const Field2D& f);

// ---- inner products ----------------------------------------------------------

/// L2 norm of the trigonometric interpolant, sqrt(sum |c_k|^2).
double l2_norm(const Field1D& f);
double l2_norm(const Field2D& f);
/// Hermitian inner product sum_k c_k conj(d_k); throws on grid mismatch.
cplx l2_inner(const Field1D& f, const Field1D& g);
cplx l2_inner(const Field2D& f, const Field2D& g);

}  // namespace vvshear
