#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "riesz/analysis.hpp"
#include "riesz/checks.hpp"
#include "riesz/config.hpp"
#include "riesz/io.hpp"
#include "riesz/run.hpp"

namespace py = pybind11;
using namespace riesz;

namespace {

// Commands print progress; the Python side gets it back as a string.
template <class F>
std::string logged(F&& f) {
    std::ostringstream log;
    f(log);
    return log.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vlasov-Riesz particle simulator and scattering diagnostics";

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<FlowAborted>(m, "FlowAborted", PyExc_RuntimeError);

    py::class_<RieszParams>(m, "RieszParams")
        .def(py::init([](double alpha, double lambda, double eps) { return RieszParams{alpha, lambda, eps}; }),
             py::arg("alpha") = 0.75, py::arg("lam") = 1.0, py::arg("eps") = 0.0)
        .def_readwrite("alpha", &RieszParams::alpha)
        .def_readwrite("lam", &RieszParams::lambda)
        .def_readwrite("eps", &RieszParams::eps)
        .def("validate", &RieszParams::validate, py::arg("for_simulation") = false);

    m.def("potential", &potential, py::arg("params"), py::arg("x"));
    m.def("grad", &grad, py::arg("params"), py::arg("x"));
    m.def("hessian", [](const RieszParams& p, const Vec3& x) { return hessian(p, x).a; }, py::arg("params"),
          py::arg("x"), "Row-major 3x3 Hessian as nine numbers.");
    m.def("laplacian", &laplacian, py::arg("params"), py::arg("x"));

    m.def("field_direct",
          [](const RieszParams& p, const std::vector<Vec3>& x, const std::vector<double>& w, const Vec3& probe) {
              return field_direct(p, x, w, probe);
          },
          py::arg("params"), py::arg("positions"), py::arg("weights"), py::arg("probe"));

    py::class_<RateFit>(m, "RateFit")
        .def_readonly("exponent", &RateFit::exponent)
        .def_readonly("intercept", &RateFit::intercept)
        .def_readonly("r_squared", &RateFit::r_squared)
        .def_readonly("n_points", &RateFit::n_points);
    m.def("rate_fit", &rate_fit, py::arg("series"), py::arg("t_lo"), py::arg("t_hi"), py::arg("min_points") = 5);

    m.def("interpolation_ratio",
          [](const RieszParams& p, double mass, double sigma, const Vec3& x, int m) {
              return interpolation_ratio(p, gaussian_density(mass, sigma), x, m);
          },
          py::arg("params"), py::arg("mass"), py::arg("sigma"), py::arg("x"), py::arg("m"),
          "Interpolation-inequality ratio for a Gaussian density of the given mass and width.");

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_static("parse", &parse_config, py::arg("text"))
        .def_static("load", &load_config, py::arg("path"))
        .def("canonical", &RunConfig::canonical)
        .def("hash", &RunConfig::hash)
        .def("resolved_eps", &RunConfig::resolved_eps)
        .def("resolved_eta", &RunConfig::resolved_eta)
        .def_readwrite("output_dir", &RunConfig::output_dir)
        .def_readwrite("run_id", &RunConfig::run_id)
        .def_readwrite("threads", &RunConfig::threads);

    m.def("simulate", [](const RunConfig& c) { return logged([&](std::ostream& o) { cmd_simulate(c, o); }); },
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("scatter", [](const RunConfig& c) { return logged([&](std::ostream& o) { cmd_scatter(c, o); }); },
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("rates", [](const std::filesystem::path& dir) {
              std::ostringstream log;
              return cmd_rates(dir, log);
          },
          py::arg("run_dir"), "Writes report.json and returns its text.");

    py::class_<CheckItem>(m, "CheckItem")
        .def_readonly("name", &CheckItem::name)
        .def_readonly("value", &CheckItem::value)
        .def_readonly("threshold", &CheckItem::threshold)
        .def_readonly("passed", &CheckItem::pass);
    m.def("run_checks",
          [](bool include_tree) {
              CheckOptions o;
              o.include_tree = include_tree;
              return run_checks(o).items;
          },
          py::arg("include_tree") = false, py::call_guard<py::gil_scoped_release>());
}
