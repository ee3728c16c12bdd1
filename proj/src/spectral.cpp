#include "vvshear/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace vvshear {

namespace {

// FFTW plan cache. Plans are created once per (shape, direction) with
// FFTW_UNALIGNED so they can be executed on any buffer via the new-array
// interface. Plan creation is serialized (the FFTW planner is not
// thread-safe); execution is safe concurrently.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    // 1D transform of length n, batched `howmany` times with stride `dist`.
    fftw_plan get(int n, int howmany, int dist, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::make_tuple(n, howmany, dist, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> scratch(static_cast<std::size_t>(howmany) * dist + n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, 1, dist,
                                         buf, nullptr, 1, dist, sign,
                                         FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

    fftw_plan get2d(int n1, int n2, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::make_tuple(-n1, n2, 0, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> scratch(static_cast<std::size_t>(n1) * n2);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_2d(n1, n2, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int, int>, fftw_plan> plans_;
};

void execute(fftw_plan p, cplx* inout) {
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(inout),
                     reinterpret_cast<fftw_complex*>(inout));
}

// (-1)^k phase relating samples at x_j = -1/2 + j/n to the standard DFT.
// For even n this only depends on the bin parity.
inline double bin_phase(int bin) { return (bin & 1) ? -1.0 : 1.0; }

void check_order(int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
}

}  // namespace

Grid1D::Grid1D(int n_points) : n(n_points) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid size must be even and >= 8");
}

std::vector<double> Grid1D::points() const {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = point(j);
    return x;
}

void Field1D::set_conjugate_pair(int k, cplx a) {
    mode(k) = a;
    if (k != 0) mode(-k) = std::conj(a);
}

void Field2D::set_conjugate_pair(int k1, int k2, cplx a) {
    mode(k1, k2) = a;
    if (k1 != 0 || k2 != 0) mode(-k1, -k2) = std::conj(a);
}

Field1D to_spectral(std::span<const cplx> samples, const Grid1D& grid) {
    if (static_cast<int>(samples.size()) != grid.n)
        throw std::invalid_argument("sample count does not match grid size");
    Field1D f(grid);
    f.coeff.assign(samples.begin(), samples.end());
    execute(PlanCache::instance().get(grid.n, 1, grid.n, FFTW_FORWARD), f.coeff.data());
    const double inv_n = 1.0 / grid.n;
    for (int b = 0; b < grid.n; ++b) f.coeff[b] *= bin_phase(b) * inv_n;
    return f;
}

Field1D to_spectral(std::span<const double> samples, const Grid1D& grid) {
    std::vector<cplx> buf(samples.begin(), samples.end());
    Field1D f = to_spectral(std::span<const cplx>(buf), grid);
    f.real_valued = true;
    return f;
}

Field2D to_spectral(std::span<const cplx> samples, const Grid2D& grid) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("sample count does not match grid size");
    Field2D f(grid);
    f.coeff.assign(samples.begin(), samples.end());
    execute(PlanCache::instance().get2d(grid.n1(), grid.n2(), FFTW_FORWARD), f.coeff.data());
    const double inv = 1.0 / static_cast<double>(grid.size());
    for (int b1 = 0; b1 < grid.n1(); ++b1) {
        const double p1 = bin_phase(b1) * inv;
        cplx* row = f.coeff.data() + static_cast<std::size_t>(b1) * grid.n2();
        for (int b2 = 0; b2 < grid.n2(); ++b2) row[b2] *= p1 * bin_phase(b2);
    }
    return f;
}

Field2D to_spectral(std::span<const double> samples, const Grid2D& grid) {
    std::vector<cplx> buf(samples.begin(), samples.end());
    Field2D f = to_spectral(std::span<const cplx>(buf), grid);
    f.real_valued = true;
    return f;
}

std::vector<cplx> to_physical(const Field1D& f) {
    std::vector<cplx> out(f.coeff);
    for (int b = 0; b < f.grid.n; ++b) out[b] *= bin_phase(b);
    execute(PlanCache::instance().get(f.grid.n, 1, f.grid.n, FFTW_BACKWARD), out.data());
    return out;
}

std::vector<cplx> to_physical(const Field2D& f) {
    std::vector<cplx> out(f.coeff);
    const int n1 = f.grid.n1(), n2 = f.grid.n2();
    for (int b1 = 0; b1 < n1; ++b1) {
        const double p1 = bin_phase(b1);
        cplx* row = out.data() + static_cast<std::size_t>(b1) * n2;
        for (int b2 = 0; b2 < n2; ++b2) row[b2] *= p1 * bin_phase(b2);
    }
    execute(PlanCache::instance().get2d(n1, n2, FFTW_BACKWARD), out.data());
    return out;
}

std::vector<double> to_physical_real(const Field1D& f) {
    std::vector<cplx> c = to_physical(f);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
    return out;
}

std::vector<double> to_physical_real(const Field2D& f) {
    std::vector<cplx> c = to_physical(f);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
    return out;
}

std::vector<cplx> to_mixed(const Field2D& f) {
    const int n1 = f.grid.n1(), n2 = f.grid.n2();
    std::vector<cplx> w(f.coeff);
    for (int b1 = 0; b1 < n1; ++b1) {
        cplx* row = w.data() + static_cast<std::size_t>(b1) * n2;
        for (int b2 = 0; b2 < n2; ++b2) row[b2] *= bin_phase(b2);
    }
    execute(PlanCache::instance().get(n2, n1, n2, FFTW_BACKWARD), w.data());
    return w;
}

Field2D from_mixed(std::span<const cplx> w, const Grid2D& grid, bool real_valued) {
    if (w.size() != grid.size()) throw std::invalid_argument("mixed buffer size mismatch");
    Field2D f(grid, real_valued);
    f.coeff.assign(w.begin(), w.end());
    const int n1 = grid.n1(), n2 = grid.n2();
    execute(PlanCache::instance().get(n2, n1, n2, FFTW_FORWARD), f.coeff.data());
    const double inv_n2 = 1.0 / n2;
    for (int b1 = 0; b1 < n1; ++b1) {
        cplx* row = f.coeff.data() + static_cast<std::size_t>(b1) * n2;
        for (int b2 = 0; b2 < n2; ++b2) row[b2] *= bin_phase(b2) * inv_n2;
    }
    return f;
}

Field1D derivative(const Field1D& f, int order) {
    check_order(order);
    Field1D out = f;
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    for (int b = 0; b < f.grid.n; ++b) {
        const int k = f.grid.wavenumber(b);
        if (order == 1) {
            out.coeff[b] = (k == f.grid.n / 2) ? cplx{0.0, 0.0}
                                               : f.coeff[b] * cplx{0.0, two_pi * k};
        } else {
            out.coeff[b] = f.coeff[b] * (-(two_pi * k) * (two_pi * k));
        }
    }
    return out;
}

Field2D derivative(const Field2D& f, int axis, int order) {
    check_order(order);
    if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    Field2D out = f;
    const int n1 = f.grid.n1(), n2 = f.grid.n2();
    for (int b1 = 0; b1 < n1; ++b1) {
        const int k1 = f.grid.axis1.wavenumber(b1);
        cplx* row = out.coeff.data() + static_cast<std::size_t>(b1) * n2;
        for (int b2 = 0; b2 < n2; ++b2) {
            const int k = (axis == 1) ? k1 : f.grid.axis2.wavenumber(b2);
            const int nyq = (axis == 1) ? n1 / 2 : n2 / 2;
            if (order == 1) {
                row[b2] = (k == nyq) ? cplx{0.0, 0.0} : row[b2] * cplx{0.0, two_pi * k};
            } else {
                row[b2] *= -(two_pi * k) * (two_pi * k);
            }
        }
    }
    return out;
}

Field1D dealias(const Field1D& f) {
    Field1D out = f;
    const int cutoff = f.grid.dealias_cutoff();
    for (int b = 0; b < f.grid.n; ++b)
        if (std::abs(f.grid.wavenumber(b)) > cutoff) out.coeff[b] = 0.0;
    return out;
}

Field2D dealias(const Field2D& f) {
    Field2D out = f;
    const int n1 = f.grid.n1(), n2 = f.grid.n2();
    const int cut1 = f.grid.axis1.dealias_cutoff();
    const int cut2 = f.grid.axis2.dealias_cutoff();
    for (int b1 = 0; b1 < n1; ++b1) {
        const bool kill1 = std::abs(f.grid.axis1.wavenumber(b1)) > cut1;
        cplx* row = out.coeff.data() + static_cast<std::size_t>(b1) * n2;
        for (int b2 = 0; b2 < n2; ++b2)
            if (kill1 || std::abs(f.grid.axis2.wavenumber(b2)) > cut2) row[b2] = 0.0;
    }
    return out;
}

double l2_norm(const Field1D& f) {
    double s = 0.0;
    for (const cplx& c : f.coeff) s += std::norm(c);
    return std::sqrt(s);
}

double l2_norm(const Field2D& f) {
    double s = 0.0;
    for (const cplx& c : f.coeff) s += std::norm(c);
    return std::sqrt(s);
}

cplx l2_inner(const Field1D& f, const Field1D& g) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("grid mismatch in inner product");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.coeff.size(); ++i) s += f.coeff[i] * std::conj(g.coeff[i]);
    return s;
}

cplx l2_inner(const Field2D& f, const Field2D& g) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("grid mismatch in inner product");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.coeff.size(); ++i) s += f.coeff[i] * std::conj(g.coeff[i]);
    return s;
}

}  // namespace vvshear
