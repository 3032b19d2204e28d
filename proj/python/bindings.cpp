#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slideocam/analysis.hpp"
#include "slideocam/cam_core.hpp"
#include "slideocam/errors.hpp"
#include "slideocam/export_io.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/geometry.hpp"

namespace py = pybind11;
using namespace slideocam;

namespace {

py::list points_of(const geometry::CamProfile& profile) {
    py::list out;
    for (const auto& p : profile.points) out.append(py::make_tuple(p.x, p.y));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Slide-o-Cam synthesis and analysis";

    static py::exception<Error> base(m, "SlideocamError");
    static py::exception<Error> solver(m, "SolverError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string msg = std::string(e.module()) + ": " + e.what();
            if (e.solver_failure()) py::set_error(solver, msg.c_str());
            else py::set_error(base, msg.c_str());
        }
    });

    py::class_<DesignParams>(m, "DesignParams")
        .def(py::init<>())
        .def(py::init([](double p, int n, int mm, double e, double a4, double b) {
                 DesignParams d{p, n, mm, e, a4, b};
                 return d;
             }),
             py::arg("p") = 50.0, py::arg("n") = 1, py::arg("m") = 2, py::arg("e") = 9.0, py::arg("a4") = 10.0,
             py::arg("b") = 4.25)
        .def_readwrite("p", &DesignParams::p)
        .def_readwrite("n", &DesignParams::n)
        .def_readwrite("m", &DesignParams::m)
        .def_readwrite("e", &DesignParams::e)
        .def_readwrite("a4", &DesignParams::a4)
        .def_readwrite("b", &DesignParams::b)
        .def_property_readonly("eta", &DesignParams::eta)
        .def("validate", &DesignParams::validate)
        .def("__repr__", [](const DesignParams& d) {
            return "DesignParams(p=" + std::to_string(d.p) + ", n=" + std::to_string(d.n) +
                   ", m=" + std::to_string(d.m) + ", e=" + std::to_string(d.e) + ", a4=" + std::to_string(d.a4) +
                   ", b=" + std::to_string(d.b) + ")";
        });

    m.def("displacement", &cam::displacement);
    m.def("contact_point", [](const DesignParams& d, double psi) {
        const auto c = cam::cam_profile_point(d, psi);
        return py::make_tuple(c.x, c.y);
    });
    m.def("pitch_point", [](const DesignParams& d, double psi) {
        const auto c = cam::pitch_point(d, psi);
        return py::make_tuple(c.x, c.y);
    });
    m.def("pressure_angle", &cam::pressure_angle);
    m.def("tan_pressure_angle", &cam::tan_pressure_angle);
    m.def("curvature_pitch", &cam::curvature_pitch);

    py::class_<geometry::ExtendedAngle>(m, "ExtendedAngle")
        .def_readonly("delta", &geometry::ExtendedAngle::delta)
        .def_readonly("residual", &geometry::ExtendedAngle::residual)
        .def_readonly("iterations", &geometry::ExtendedAngle::iterations);
    m.def("solve_extended_angle", [](const DesignParams& d) { return geometry::solve_extended_angle(d); });

    m.def(
        "cam_profile",
        [](const DesignParams& d, int samples) {
            geometry::GenerationSettings g;
            g.samples = samples;
            return points_of(geometry::generate_cam(d, g));
        },
        py::arg("params"), py::arg("samples") = 720);
    m.def(
        "is_convex",
        [](const DesignParams& d, int samples) {
            geometry::GenerationSettings g;
            g.samples = samples;
            return geometry::is_convex_polyline(geometry::generate_cam(d, g));
        },
        py::arg("params"), py::arg("samples") = 720);

    py::class_<feasibility::ConstraintCheck>(m, "ConstraintCheck")
        .def_readonly("ok", &feasibility::ConstraintCheck::ok)
        .def_readonly("margin", &feasibility::ConstraintCheck::margin);
    py::class_<feasibility::FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("roller_spacing", &feasibility::FeasibilityReport::roller_spacing)
        .def_readonly("shaft_clearance", &feasibility::FeasibilityReport::shaft_clearance)
        .def_readonly("eta_lower", &feasibility::FeasibilityReport::eta_lower)
        .def_readonly("convexity", &feasibility::FeasibilityReport::convexity)
        .def_readonly("shaft_contact", &feasibility::FeasibilityReport::shaft_contact)
        .def_readonly("feasible", &feasibility::FeasibilityReport::feasible);
    m.def("check_feasibility", &feasibility::check_feasibility);

    py::class_<analysis::ActiveInterval>(m, "ActiveInterval")
        .def_readonly("psi_lo", &analysis::ActiveInterval::psi_lo)
        .def_readonly("psi_hi", &analysis::ActiveInterval::psi_hi)
        .def_readonly("extrapolated", &analysis::ActiveInterval::extrapolated)
        .def_property_readonly("length", &analysis::ActiveInterval::length);
    m.def("active_interval", &analysis::active_interval);

    py::class_<analysis::MaxPressureAngle>(m, "MaxPressureAngle")
        .def_readonly("mu_abs", &analysis::MaxPressureAngle::mu_abs)
        .def_readonly("psi", &analysis::MaxPressureAngle::psi)
        .def_readonly("tan_mu", &analysis::MaxPressureAngle::tan_mu)
        .def_readonly("single_cam", &analysis::MaxPressureAngle::single_cam)
        .def_readonly("exceeds_guideline", &analysis::MaxPressureAngle::exceeds_guideline)
        .def_readonly("extrapolated", &analysis::MaxPressureAngle::extrapolated);
    m.def("max_pressure_angle", [](const DesignParams& d) { return analysis::max_pressure_angle(d); });

    m.def("parse_config", [](const std::string& text, const std::vector<std::string>& overrides) {
        return io::parse_config(text, overrides).params;
    }, py::arg("text"), py::arg("overrides") = std::vector<std::string>{});
    m.attr("__version__") = "0.1.0";
}
