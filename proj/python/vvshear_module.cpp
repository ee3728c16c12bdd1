// Python bindings for the shear-flow vanishing-viscosity library.
// Fields cross the boundary as numpy arrays of Fourier coefficients in
// DFT-bin order (the same layout the C++ side uses).

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vvshear/harness.hpp"
#include "vvshear/verify.hpp"
#include "vvshear/version.hpp"

namespace py = pybind11;
using namespace vvshear;

namespace {

Field1D field1d_from_array(const Grid1D& grid, py::array_t<cplx> coeff) {
    auto buf = coeff.unchecked<1>();
    if (static_cast<int>(buf.shape(0)) != grid.n)
        throw std::invalid_argument("coefficient array does not match the grid");
    Field1D f(grid);
    for (int b = 0; b < grid.n; ++b) f.coeff[b] = buf(b);
    return f;
}

py::array_t<cplx> field1d_to_array(const Field1D& f) {
    py::array_t<cplx> out(f.grid.n);
    auto buf = out.mutable_unchecked<1>();
    for (int b = 0; b < f.grid.n; ++b) buf(b) = f.coeff[b];
    return out;
}

Field2D field2d_from_array(const Grid2D& grid, py::array_t<cplx> coeff) {
    auto buf = coeff.unchecked<2>();
    if (static_cast<int>(buf.shape(0)) != grid.n1() ||
        static_cast<int>(buf.shape(1)) != grid.n2())
        throw std::invalid_argument("coefficient array does not match the grid");
    Field2D f(grid);
    for (int b1 = 0; b1 < grid.n1(); ++b1)
        for (int b2 = 0; b2 < grid.n2(); ++b2)
            f.coeff[static_cast<std::size_t>(b1) * grid.n2() + b2] = buf(b1, b2);
    return f;
}

py::array_t<cplx> field2d_to_array(const Field2D& f) {
    py::array_t<cplx> out({f.grid.n1(), f.grid.n2()});
    auto buf = out.mutable_unchecked<2>();
    for (int b1 = 0; b1 < f.grid.n1(); ++b1)
        for (int b2 = 0; b2 < f.grid.n2(); ++b2)
            buf(b1, b2) = f.coeff[static_cast<std::size_t>(b1) * f.grid.n2() + b2];
    return out;
}

std::vector<double> doubles_from_array(py::array_t<double> a) {
    auto buf = a.unchecked<1>();
    std::vector<double> v(buf.shape(0));
    for (py::ssize_t i = 0; i < buf.shape(0); ++i) v[i] = buf(i);
    return v;
}

}  // namespace

PYBIND11_MODULE(vvshear, m) {
    m.doc() = "Pseudo-spectral shear-flow solver: vanishing-viscosity experiments on the torus";
    m.attr("__version__") = kVersion;

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<int>(), py::arg("n"))
        .def_readonly("n", &Grid1D::n)
        .def("points", &Grid1D::points)
        .def("wavenumber", &Grid1D::wavenumber)
        .def("dealias_cutoff", &Grid1D::dealias_cutoff);

    py::class_<Grid2D>(m, "Grid2D")
        .def(py::init<int, int>(), py::arg("n1"), py::arg("n2"))
        .def_property_readonly("n1", &Grid2D::n1)
        .def_property_readonly("n2", &Grid2D::n2);

    py::class_<Field1D>(m, "Field1D")
        .def_readonly("grid", &Field1D::grid)
        .def_readonly("real_valued", &Field1D::real_valued)
        .def_property_readonly("coeff", &field1d_to_array)
        .def("mode", [](const Field1D& f, int k) { return f.mode(k); });

    py::class_<Field2D>(m, "Field2D")
        .def_readonly("grid", &Field2D::grid)
        .def_readonly("real_valued", &Field2D::real_valued)
        .def_property_readonly("coeff", &field2d_to_array)
        .def("mode", [](const Field2D& f, int k1, int k2) { return f.mode(k1, k2); });

    m.def("field_1d", &field1d_from_array, py::arg("grid"), py::arg("coeff"),
          "Build a Field1D from coefficients in DFT-bin order");
    m.def("field_2d", &field2d_from_array, py::arg("grid"), py::arg("coeff"));

    // transforms
    m.def("to_spectral", [](const Grid1D& g, py::array_t<double> samples) {
        return to_spectral(std::span<const double>(doubles_from_array(samples)), g);
    }, py::arg("grid"), py::arg("samples"));
    m.def("to_spectral_2d", [](const Grid2D& g, py::array_t<double> samples) {
        auto buf = samples.unchecked<2>();
        std::vector<double> v(g.size());
        for (int i = 0; i < g.n1(); ++i)
            for (int j = 0; j < g.n2(); ++j)
                v[static_cast<std::size_t>(i) * g.n2() + j] = buf(i, j);
        return to_spectral(std::span<const double>(v), g);
    }, py::arg("grid"), py::arg("samples"));
    m.def("to_physical", [](const Field1D& f) {
        py::array_t<cplx> out(f.grid.n);
        const auto v = to_physical(f);
        auto buf = out.mutable_unchecked<1>();
        for (int j = 0; j < f.grid.n; ++j) buf(j) = v[j];
        return out;
    });
    m.def("to_physical_2d", [](const Field2D& f) {
        py::array_t<cplx> out({f.grid.n1(), f.grid.n2()});
        const auto v = to_physical(f);
        auto buf = out.mutable_unchecked<2>();
        for (int i = 0; i < f.grid.n1(); ++i)
            for (int j = 0; j < f.grid.n2(); ++j)
                buf(i, j) = v[static_cast<std::size_t>(i) * f.grid.n2() + j];
        return out;
    });

    m.def("derivative", py::overload_cast<const Field1D&, int>(&derivative),
          py::arg("field"), py::arg("order"));
    m.def("derivative_2d", py::overload_cast<const Field2D&, int, int>(&derivative),
          py::arg("field"), py::arg("axis"), py::arg("order"));
    m.def("dealias", py::overload_cast<const Field1D&>(&dealias));
    m.def("dealias_2d", py::overload_cast<const Field2D&>(&dealias));
    m.def("l2_norm", py::overload_cast<const Field1D&>(&l2_norm));
    m.def("l2_norm_2d", py::overload_cast<const Field2D&>(&l2_norm));
    m.def("l2_inner", py::overload_cast<const Field1D&, const Field1D&>(&l2_inner));
    m.def("l2_inner_2d", py::overload_cast<const Field2D&, const Field2D&>(&l2_inner));

    // initial data
    py::enum_<VelocityMode>(m, "VelocityMode")
        .value("pointwise_sign", VelocityMode::pointwise_sign)
        .value("truncated_series", VelocityMode::truncated_series);

    m.def("square_wave_shear", &square_wave_shear, py::arg("grid"));
    m.def("single_mode_v3", [](const Grid2D& g, int m1, int m2, double amplitude) {
        V3Spec spec;
        spec.m1 = m1;
        spec.m2 = m2;
        spec.amplitude = amplitude;
        return sample_v3(spec, g);
    }, py::arg("grid"), py::arg("m1"), py::arg("m2"), py::arg("amplitude") = 1.0);
    m.def("random_band_limited_v3", [](const Grid2D& g, int max_mode, std::uint64_t seed) {
        V3Spec spec;
        spec.kind = V3Spec::Kind::random_band_limited;
        spec.max_mode = max_mode;
        spec.seed = seed;
        return sample_v3(spec, g);
    }, py::arg("grid"), py::arg("max_mode"), py::arg("seed"));

    // exact solutions
    m.def("sign_samples", &sign_samples, py::arg("grid"));
    m.def("heat_square_wave_samples", &heat_square_wave_samples,
          py::arg("nu"), py::arg("t"), py::arg("grid"));
    m.def("shear_flow_eval", [](py::array_t<double> v1, const Field2D& v3, double t) {
        return shear_flow_eval(doubles_from_array(v1), v3, t);
    }, py::arg("v1_samples"), py::arg("v3"), py::arg("t"));
    m.def("transport_evolve", [](const Field2D& w0, py::array_t<double> v1, double t) {
        return transport_evolve(w0, doubles_from_array(v1), t);
    }, py::arg("w0"), py::arg("v1_samples"), py::arg("t"));
    m.def("heat_evolve", &heat_evolve, py::arg("u0"), py::arg("nu"), py::arg("t"));
    m.def("heat_limit_error",
          py::overload_cast<double, double, int>(&heat_limit_error),
          py::arg("nu"), py::arg("t"), py::arg("max_sine_mode"));

    // solver + diagnostics on the default square-wave / sin(2 pi x1) scenario
    py::class_<ViscousTrajectory>(m, "ViscousTrajectory")
        .def_readonly("nu", &ViscousTrajectory::nu)
        .def_readonly("dt", &ViscousTrajectory::dt)
        .def_readonly("times", &ViscousTrajectory::times)
        .def_readonly("energy_ledger", &ViscousTrajectory::energy_ledger)
        .def("u3", [](const ViscousTrajectory& t, std::size_t j) {
            return t.u3_snapshots.at(j);
        })
        .def("u1", [](const ViscousTrajectory& t, std::size_t j) {
            return t.u1_snapshots.at(j);
        })
        .def("snapshot_count", [](const ViscousTrajectory& t) { return t.times.size(); });

    m.def("advect_substep", [](const Field2D& u3, py::array_t<double> u1, double tau) {
        return advect_substep(u3, doubles_from_array(u1), tau);
    });
    m.def("diffuse_substep", &diffuse_substep, py::arg("u3"), py::arg("nu"), py::arg("tau"));

    m.def("solve_shear", [](double nu, int n, int n_shear, double T, double dt, int stride,
                            VelocityMode mode) {
        ShearDatum datum;
        SolverConfig sc;
        sc.dt = dt;
        sc.T = T;
        sc.snapshot_stride = stride;
        sc.velocity_mode = mode;
        return solve(datum, nu, sc, Grid1D(n_shear), Grid2D(n, n));
    }, py::arg("nu"), py::arg("n") = 64, py::arg("n_shear") = 256, py::arg("T") = 0.5,
       py::arg("dt") = 1e-3, py::arg("stride") = 5,
       py::arg("mode") = VelocityMode::pointwise_sign,
       "Solve the default square-wave / sin(2 pi x1) scenario at one viscosity");

    py::class_<RateFit>(m, "RateFit")
        .def_readonly("slope", &RateFit::slope)
        .def_readonly("intercept", &RateFit::intercept)
        .def_readonly("residual", &RateFit::residual);
    m.def("fit_rate", [](std::vector<double> nus, std::vector<double> errors) {
        return fit_rate(nus, errors);
    }, py::arg("nus"), py::arg("errors"));

    // harness
    py::class_<NuSummary>(m, "NuSummary")
        .def_readonly("nu", &NuSummary::nu)
        .def_readonly("sup_l2_err_u3", &NuSummary::sup_l2_err_u3)
        .def_readonly("l2t_err_u1", &NuSummary::l2t_err_u1)
        .def_readonly("weak_pair_max_abs", &NuSummary::weak_pair_max_abs)
        .def_readonly("initial_energy", &NuSummary::initial_energy)
        .def_readonly("final_energy", &NuSummary::final_energy)
        .def_readonly("admissible", &NuSummary::admissible)
        .def_readonly("times", &NuSummary::times)
        .def_readonly("l2_err_u3", &NuSummary::l2_err_u3)
        .def_readonly("l2_err_u1", &NuSummary::l2_err_u1)
        .def_readonly("energy", &NuSummary::energy);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("nu_ladder", &ConvergenceReport::nu_ladder)
        .def_readonly("entries", &ConvergenceReport::entries)
        .def_readonly("u1_rate", &ConvergenceReport::u1_rate)
        .def_readonly("weak_rate", &ConvergenceReport::weak_rate)
        .def_readonly("metadata", &ConvergenceReport::metadata);

    m.def("parse_config", [](const std::string& text) { return parse_config(text); },
          py::arg("text"));
    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("n1", &RunConfig::n1)
        .def_readonly("n2", &RunConfig::n2)
        .def_readonly("T", &RunConfig::T)
        .def_readonly("dt", &RunConfig::dt)
        .def_readonly("ladder", &RunConfig::ladder);
    m.def("run_sweep", &run_sweep, py::arg("config"),
          "One viscous solve per ladder entry plus diagnostics");
    m.def("write_report_files", &write_report_files, py::arg("report"), py::arg("config"));

    m.def("verify", []() {
        py::list out;
        for (const CheckResult& r : run_verification_suite()) {
            out.append(py::make_tuple(r.name, r.pass, r.detail));
        }
        return out;
    }, "Run the library self-check suite; returns (name, pass, detail) tuples");
}
