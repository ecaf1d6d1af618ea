#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heisenring/asymptotics.hpp"
#include "heisenring/concurrence.hpp"
#include "heisenring/exact.hpp"
#include "heisenring/io.hpp"
#include "heisenring/magnon.hpp"
#include "heisenring/profile.hpp"

namespace py = pybind11;
using namespace heisenring;

PYBIND11_MODULE(_core, m) {
    m.doc() = "thermal entanglement of the ferromagnetic Heisenberg ring";

    py::register_exception<invalid_input_error>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

    py::class_<ChainParams>(m, "ChainParams")
        .def(py::init([](int n_sites, double beta_j, double beta_mub) {
                 ChainParams p{n_sites, beta_j, beta_mub};
                 validate(p);
                 return p;
             }),
             py::arg("n_sites"), py::arg("beta_j"), py::arg("beta_mub"))
        .def_readonly("n_sites", &ChainParams::n_sites)
        .def_readonly("beta_j", &ChainParams::beta_j)
        .def_readonly("beta_mub", &ChainParams::beta_mub)
        .def("__repr__", [](const ChainParams& p) {
            return "ChainParams(n_sites=" + std::to_string(p.n_sites) +
                   ", beta_j=" + std::to_string(p.beta_j) +
                   ", beta_mub=" + std::to_string(p.beta_mub) + ")";
        });

    py::class_<TwoSiteDensity>(m, "TwoSiteDensity")
        .def(py::init([](double u_plus, double u_minus, double w, double z) {
                 return TwoSiteDensity{u_plus, u_minus, w, z};
             }),
             py::arg("u_plus"), py::arg("u_minus"), py::arg("w"), py::arg("z"))
        .def_readonly("u_plus", &TwoSiteDensity::u_plus)
        .def_readonly("u_minus", &TwoSiteDensity::u_minus)
        .def_readonly("w", &TwoSiteDensity::w)
        .def_readonly("z", &TwoSiteDensity::z);

    py::class_<TruncationReport>(m, "TruncationReport")
        .def_readonly("retained_weight", &TruncationReport::retained_weight)
        .def_readonly("leading_neglected_weight",
                      &TruncationReport::leading_neglected_weight);

    py::class_<GaussianProfileParams>(m, "GaussianProfileParams")
        .def_readonly("amplitude", &GaussianProfileParams::amplitude)
        .def_readonly("length", &GaussianProfileParams::length);

    m.def("ground_state_energy", [](const ChainParams& p) {
        validate(p);
        return ground_state_energy(p);
    });
    m.def("magnon_energy", &magnon_energy, py::arg("params"), py::arg("s"));
    m.def("band_sum", &band_sum);
    m.def("saddle_band_sum", &saddle_band_sum);
    m.def("truncated_log_partition", &truncated_log_partition);
    m.def("truncated_rdm", &truncated_rdm, py::arg("params"), py::arg("distance"));
    m.def("truncation_weight", &truncation_weight);
    m.def("gaussian_rdm", &gaussian_rdm, py::arg("params"), py::arg("distance"));
    m.def("gaussian_profile_params", &gaussian_profile_params);
    m.def("entanglement_length", &entanglement_length);
    m.def("gaussian_concurrence", &gaussian_concurrence, py::arg("params"),
          py::arg("distance"));

    m.def(
        "exact_rdm",
        [](const ChainParams& p, int site_m, int site_n, int max_exact_n) {
            const ThermalState state = solve_thermal(p, max_exact_n);
            return two_site_rdm(state, site_m, site_n);
        },
        py::arg("params"), py::arg("site_m"), py::arg("site_n"),
        py::arg("max_exact_n") = kDefaultExactNCap,
        "two-site RDM from the dense all-sector thermal solve");
    m.def("rdm_as_matrix",
          [](const TwoSiteDensity& d) -> Eigen::Matrix4cd { return rdm_as_matrix(d); });

    m.def("spin_flip", &spin_flip);
    m.def("wootters_concurrence", &wootters_concurrence);
    m.def("xstate_concurrence", &xstate_concurrence);
    m.def("is_x_form", &is_x_form, py::arg("rho"), py::arg("tol") = 1e-10);

    m.def(
        "profile",
        [](const ChainParams& p, const std::string& method, int max_exact_n) {
            const auto parsed = parse_method(method);
            if (!parsed) throw invalid_input_error("unknown method '" + method + "'");
            const ConcurrenceProfile prof = compute_profile(p, *parsed, max_exact_n);
            std::vector<std::pair<int, double>> points;
            for (const ProfilePoint& pt : prof.points)
                points.emplace_back(pt.distance, pt.concurrence);
            return points;
        },
        py::arg("params"), py::arg("method") = "gaussian",
        py::arg("max_exact_n") = kDefaultExactNCap,
        "list of (distance, concurrence) for d = 1..N/2");
    m.def("validity_warnings", [](const ChainParams& p, const std::string& method) {
        const auto parsed = parse_method(method);
        if (!parsed) throw invalid_input_error("unknown method '" + method + "'");
        return validity_warnings(p, *parsed);
    });
}
