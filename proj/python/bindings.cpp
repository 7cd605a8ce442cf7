// Python bindings for the liftdim core: configuration/bounds, grids, the
// forward and lifting operators, Slepian spectra and spectrum analysis.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liftdim/forward_op.hpp"
#include "liftdim/report.hpp"

namespace py = pybind11;
using namespace liftdim;

PYBIND11_MODULE(_liftdim, m) {
    m.doc() = "Data-space dimension of a lifted Fresnel-zone phase retrieval operator";
    configure_blas_runtime();

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<ProblemConfig>(m, "ProblemConfig")
        .def(py::init<>())
        .def_readwrite("a", &ProblemConfig::a)
        .def_readwrite("u_max", &ProblemConfig::u_max)
        .def_readwrite("r_min", &ProblemConfig::r_min)
        .def_readwrite("r_max", &ProblemConfig::r_max)
        .def_readwrite("n_x", &ProblemConfig::n_x)
        .def_readwrite("n_u", &ProblemConfig::n_u)
        .def_readwrite("n_s", &ProblemConfig::n_s)
        .def_readwrite("tau_db", &ProblemConfig::tau_db)
        .def_property_readonly("s_max", &ProblemConfig::s_max)
        .def("validate", &ProblemConfig::validate)
        .def_readonly_static("beta", &ProblemConfig::beta);

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("m_u", &BoundResult::m_u)
        .def_readonly("m_s", &BoundResult::m_s)
        .def_readonly("m_bar", &BoundResult::m_bar)
        .def_readonly("m_u_ceil", &BoundResult::m_u_ceil)
        .def_readonly("m_s_ceil", &BoundResult::m_s_ceil)
        .def_readonly("m_bar_ceil", &BoundResult::m_bar_ceil);

    m.def("compute_bounds", &compute_bounds, py::arg("config"));
    m.def("validate_fresnel_regime", &validate_fresnel_regime, py::arg("config"));

    py::class_<Grid1D>(m, "Grid1D")
        .def_readonly("nodes", &Grid1D::nodes)
        .def_readonly("weights", &Grid1D::weights)
        .def_readonly("lo", &Grid1D::lo)
        .def_readonly("hi", &Grid1D::hi)
        .def("__len__", &Grid1D::size);

    py::class_<TensorGrid2D>(m, "TensorGrid2D")
        .def(py::init([](const Grid1D& a, const Grid1D& b) { return TensorGrid2D{a, b}; }))
        .def_readonly("axis1", &TensorGrid2D::axis1)
        .def_readonly("axis2", &TensorGrid2D::axis2)
        .def("__len__", &TensorGrid2D::size);

    m.def("uniform_grid", &uniform_grid, py::arg("lo"), py::arg("hi"), py::arg("n"));
    m.def("s_grid_from_r", &s_grid_from_r, py::arg("config"));

    py::class_<ComplexOperatorMatrix>(m, "ComplexOperatorMatrix")
        .def_readonly("entries", &ComplexOperatorMatrix::entries)
        .def_readonly("quadrature_absorbed", &ComplexOperatorMatrix::quadrature_absorbed)
        .def_property_readonly("rows", &ComplexOperatorMatrix::rows)
        .def_property_readonly("cols", &ComplexOperatorMatrix::cols);

    m.def("assemble_T", &assemble_T, py::arg("config"), py::arg("x_grid"), py::arg("r_grid"),
          py::arg("u_grid"));
    m.def("apply_T", &apply_T, py::arg("T"), py::arg("J"));
    m.def("squared_field", &squared_field, py::arg("T"), py::arg("J"));

    m.def("assemble_A", &assemble_A, py::arg("config"), py::arg("xx_grid"), py::arg("r_grid"),
          py::arg("u_grid"));
    m.def("assemble_A_adjoint", &assemble_A_adjoint, py::arg("A"), py::arg("weighted"),
          py::arg("config"));
    m.def("compose", &compose, py::arg("A"), py::arg("Adag"));
    m.def("weight_function", &weight_function, py::arg("x"), py::arg("xbar"), py::arg("r_max"));

    py::class_<LiftedPoint>(m, "LiftedPoint")
        .def_readonly("x1", &LiftedPoint::x1)
        .def_readonly("x2", &LiftedPoint::x2)
        .def_property_readonly("diagonal_image", &LiftedPoint::diagonal_image);
    m.def("map_to_lifted", &map_to_lifted, py::arg("x"), py::arg("xbar"), py::arg("r_max"));

    py::class_<LiftedDomainSample>(m, "LiftedDomainSample")
        .def_readonly("points", &LiftedDomainSample::points)
        .def_readonly("x1_half_width", &LiftedDomainSample::x1_half_width)
        .def_readonly("x2_half_width", &LiftedDomainSample::x2_half_width);
    m.def("sample_lifted_domain", &sample_lifted_domain, py::arg("config"), py::arg("n_samples"));

    m.def("approx_kernel_H", &approx_kernel_H, py::arg("r"), py::arg("r_o"), py::arg("u"),
          py::arg("u_o"), py::arg("config"));
    m.def("assemble_AAdag_approx", &assemble_AAdag_approx, py::arg("config"), py::arg("s_grid"),
          py::arg("u_grid"), py::arg("symmetrized"));

    py::class_<SlepianSpectrum>(m, "SlepianSpectrum")
        .def_readonly("omega", &SlepianSpectrum::omega)
        .def_readonly("half_width", &SlepianSpectrum::half_width)
        .def_readonly("shannon", &SlepianSpectrum::shannon)
        .def_readonly("eigenvalues", &SlepianSpectrum::eigenvalues)
        .def("count_above", &SlepianSpectrum::count_above, py::arg("threshold"));
    m.def("slepian_spectrum", &slepian_spectrum, py::arg("omega"), py::arg("lo"), py::arg("hi"),
          py::arg("n"));

    py::enum_<SpectrumKind>(m, "SpectrumKind")
        .value("svd_A", SpectrumKind::svd_A)
        .value("sqrt_eig_AAdag", SpectrumKind::sqrt_eig_AAdag)
        .value("sqrt_eig_AAdag_w", SpectrumKind::sqrt_eig_AAdag_w)
        .value("sqrt_eig_approx", SpectrumKind::sqrt_eig_approx)
        .value("product_closed_form", SpectrumKind::product_closed_form);

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("values", &SpectrumResult::values)
        .def_readonly("kind", &SpectrumResult::kind)
        .def_readonly("critical_index", &SpectrumResult::critical_index)
        .def_readonly("threshold_db", &SpectrumResult::threshold_db)
        .def_readonly("complex_eig_flags", &SpectrumResult::complex_eig_flags)
        .def("__len__", &SpectrumResult::size);

    m.def("product_spectrum", &product_spectrum, py::arg("spec_u"), py::arg("spec_s"),
          py::arg("scale"), py::arg("tau_db"));
    m.def("detect_critical_index", &detect_critical_index, py::arg("values"), py::arg("tau_db"));
    m.def("svd_spectrum", &svd_spectrum, py::arg("A"), py::arg("tau_db"));
    m.def("eig_spectrum", &eig_spectrum, py::arg("M"), py::arg("hermitian"), py::arg("tau_db"));

    py::enum_<OperatorKind>(m, "OperatorKind")
        .value("lifting", OperatorKind::lifting)
        .value("weighted", OperatorKind::weighted)
        .value("approx", OperatorKind::approx)
        .value("product", OperatorKind::product);

    m.def("load_config", &load_config, py::arg("path"));
    m.def(
        "run_spectrum",
        [](const ProblemConfig& config, OperatorKind kind) {
            return run_spectrum(config, kind, nullptr);
        },
        py::arg("config"), py::arg("kind"));
    m.def(
        "run_slepian",
        [](const ProblemConfig& config, const std::string& axis) {
            if (axis.size() != 1) throw ConfigError("axis", "must be 'u' or 's'");
            return run_slepian(config, axis[0]);
        },
        py::arg("config"), py::arg("axis"));
}
