#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orlapprox/approx.hpp"
#include "orlapprox/errors.hpp"
#include "orlapprox/jackson.hpp"
#include "orlapprox/orlicz.hpp"
#include "orlapprox/smoothness.hpp"
#include "orlapprox/spectrum.hpp"
#include "orlapprox/suite.hpp"

namespace py = pybind11;
using namespace orlapprox;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Norms, best approximations and sharp Jackson constants in Musielak-Orlicz spaces";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", base.ptr());
    // Subclasses not registered separately surface as their registered base.
    (void)domain;

    py::enum_<NormKind>(m, "NormKind")
        .value("luxemburg", NormKind::luxemburg)
        .value("orlicz", NormKind::orlicz);

    py::class_<Spectrum>(m, "Spectrum")
        .def(py::init<int>(), py::arg("radius"))
        .def(py::init([](int radius, std::vector<Complex> coeffs) { return Spectrum(radius, std::move(coeffs)); }),
             py::arg("radius"), py::arg("coeffs"))
        .def_static(
            "from_rule",
            [](const std::string& tag, const std::map<std::string, std::vector<double>>& params, int radius) {
                const RuleParams p(params.begin(), params.end());
                return spectrum_from_rule(make_rule(tag, p), radius);
            },
            py::arg("tag"), py::arg("params"), py::arg("radius"))
        .def_static(
            "from_samples",
            [](const std::vector<Complex>& samples, int radius) { return spectrum_from_samples(samples, radius); },
            py::arg("samples"), py::arg("radius"))
        .def_property_readonly("radius", &Spectrum::radius)
        .def("__getitem__", &Spectrum::at)
        .def("__setitem__", &Spectrum::set)
        .def("values", [](const Spectrum& s) { return std::vector<Complex>(s.values().begin(), s.values().end()); });

    py::class_<OrliczFamily>(m, "OrliczFamily")
        .def_static("power", py::overload_cast<int, double, double>(&OrliczFamily::power), py::arg("radius"),
                    py::arg("exponent"), py::arg("weight") = 1.0)
        .def_static("power_per_index",
                    py::overload_cast<int, std::vector<double>, std::vector<double>>(&OrliczFamily::power),
                    py::arg("radius"), py::arg("exponents"), py::arg("weights"))
        .def_static("scaled_power", &OrliczFamily::scaled_power, py::arg("radius"), py::arg("exponent"))
        .def_static(
            "tabulated",
            [](int radius, std::vector<std::pair<double, double>> points) {
                return OrliczFamily::custom(radius, OrliczFunction::tabulated(std::move(points)));
            },
            py::arg("radius"), py::arg("points"))
        .def_property_readonly("radius", &OrliczFamily::radius);

    py::class_<Multiplier>(m, "Multiplier")
        .def_static("classical", &Multiplier::classical, py::arg("alpha"))
        .def_static(
            "tabulated",
            [](std::vector<std::pair<double, double>> points, bool periodic) {
                return Multiplier::tabulated(std::move(points), periodic);
            },
            py::arg("points"), py::arg("periodic") = false)
        .def("__call__", &Multiplier::operator())
        .def_property_readonly("bound", &Multiplier::bound);

    m.def("luxemburg_norm", &luxemburg_norm, py::arg("family"), py::arg("spectrum"));
    m.def("orlicz_norm", &orlicz_norm, py::arg("family"), py::arg("spectrum"));
    m.def("norm", &norm, py::arg("family"), py::arg("spectrum"), py::arg("kind"));
    m.def("best_approx", &best_approx, py::arg("family"), py::arg("spectrum"), py::arg("n"), py::arg("kind"));
    m.def("best_approx_sequence", &best_approx_sequence, py::arg("family"), py::arg("spectrum"), py::arg("n_first"),
          py::arg("n_last"), py::arg("kind"));

    m.def(
        "modulus",
        [](const Spectrum& s, const Multiplier& phi, double delta, const OrliczFamily& fam, NormKind kind, int h_grid) {
            const auto r = modulus(s, phi, delta, fam, kind, h_grid);
            py::dict d;
            d["value"] = r.value;
            d["h_argmax"] = r.h_argmax;
            d["grid_value"] = r.grid_value;
            d["refinement_gap"] = r.refinement_gap;
            return d;
        },
        py::arg("spectrum"), py::arg("phi"), py::arg("delta"), py::arg("family"), py::arg("kind"),
        py::arg("h_grid") = kDefaultHGrid);

    m.def(
        "sharp_constant",
        [](const Multiplier& phi, double p, int n, double tau, int grid, int j_max, bool sensitivity) {
            SharpConstantOptions o;
            o.grid = grid;
            o.j_max = j_max;
            o.sensitivity = sensitivity;
            const auto r = sharp_constant_lp(phi, p, n, tau, o);
            py::dict d;
            d["J"] = r.J;
            d["C"] = r.C;
            d["first_frequency"] = r.first_frequency;
            d["rho"] = r.rho;
            d["nodes"] = r.measure.nodes();
            d["weights"] = r.measure.weights();
            d["duality_gap"] = r.diagnostics.duality_gap;
            if (r.diagnostics.sensitivity_run) d["sensitivity_C"] = r.diagnostics.sensitivity_constant;
            return d;
        },
        py::arg("phi"), py::arg("p"), py::arg("n"), py::arg("tau"), py::arg("grid") = 512, py::arg("j_max") = 0,
        py::arg("sensitivity") = false);

    m.def(
        "run_criterion",
        [](int id, std::uint64_t seed) {
            SuiteOptions o;
            o.seed = seed;
            const auto r = run_criterion(id, o);
            py::dict d;
            d["id"] = r.id;
            d["title"] = r.title;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            return d;
        },
        py::arg("id"), py::arg("seed") = SuiteOptions{}.seed);
}
