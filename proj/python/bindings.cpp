#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "burniat/cli.hpp"
#include "burniat/hypothesis_checker.hpp"
#include "burniat/scenario_registry.hpp"
#include "burniat/tables.hpp"
#include "burniat/theta_numeric.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

std::string verify_json(const std::string& family) {
    return burniat::to_json(burniat::full_report(burniat::builtin(family))).dump();
}

std::string check_json(const std::string& text) {
    return burniat::to_json(burniat::full_report(burniat::parse_scenario(text))).dump();
}

std::string table_text(const std::string& which, const std::string& format) {
    return burniat::render(burniat::table_by_name(which), burniat::parse_format(format));
}

std::string diff_text(const std::string& which, const std::string& format) {
    return burniat::render(burniat::diff_by_name(which), burniat::parse_format(format));
}

py::dict numeric(const std::string& tau1, const std::string& tau2, const std::string& tau3, int samples, double tol,
                 std::uint64_t seed) {
    burniat::NumericConfig config;
    config.taus = {burniat::parse_complex(tau1), burniat::parse_complex(tau2), burniat::parse_complex(tau3)};
    config.samples = samples;
    config.tol = tol;
    config.seed = seed;
    burniat::NumericReport rep;
    {
        py::gil_scoped_release release;
        rep = burniat::run_numeric(config);
    }
    py::dict checks;
    for (const auto& c : rep.checks) checks[py::str(c.name)] = py::make_tuple(c.passed, c.detail);
    py::dict out;
    out["passed"] = rep.passed();
    out["checks"] = checks;
    return out;
}

// Runs the command-line front end in-process and returns (exit code, stdout, stderr).
py::tuple run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"burniat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = burniat::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hodge data, character tables and hypothesis checks for generalized Burniat surfaces";

    // Translators run newest first, so the base class goes in before its subclasses.
    py::register_exception<burniat::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<burniat::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<burniat::ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("builtin_names", &burniat::builtin_names, "S1 ... S16, then sicilian");
    m.def("verify_json", &verify_json, py::arg("family"), "Checker report for a built-in family, as JSON text");
    m.def("check_json", &check_json, py::arg("text"), "Checker report for a custom scenario given as JSON text");
    m.def("table_text", &table_text, py::arg("which"), py::arg("format") = "md");
    m.def("diff_text", &diff_text, py::arg("which"), py::arg("format") = "json");
    m.def("numeric", &numeric, py::arg("tau1") = "i", py::arg("tau2") = "i", py::arg("tau3") = "i", py::arg("samples") = 100,
          py::arg("tol") = 1e-9, py::arg("seed") = 1);
    m.def("run_cli", &run_cli, py::arg("args"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
