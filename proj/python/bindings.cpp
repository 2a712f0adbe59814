#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "radonfd/config.hpp"
#include "radonfd/errors.hpp"
#include "radonfd/fracderiv.hpp"
#include "radonfd/radon.hpp"
#include "radonfd/report.hpp"
#include "radonfd/special.hpp"
#include "radonfd/suite.hpp"
#include "radonfd/verify.hpp"

namespace py = pybind11;
using namespace radonfd;

namespace {

py::dict frac_result(const FracDerivResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["bracket"] = r.bracket;
  d["q"] = r.q;
  d["m"] = r.m_used;
  d["route"] = std::string(to_string(r.route));
  d["estimated_error"] = r.diagnostics.estimated_error;
  d["evaluations"] = r.diagnostics.evaluations;
  d["near_zero_model"] = r.diagnostics.near_zero_model;
  d["converged"] = r.diagnostics.converged;
  return d;
}

Direction as_direction(const Eigen::VectorXd& v) { return Direction::normalized(v); }

RunConfig config_from(const std::string& command, const std::string& subcommand, const py::dict& settings) {
  RunConfig config;
  if (command == "sweep") config.format = OutputFormat::Csv;
  config.command = command;
  config.subcommand = subcommand;
  for (const auto& [k, v] : settings) apply_setting(config, std::string(py::str(k)), std::string(py::str(v)));
  return config;
}

}  // namespace

PYBIND11_MODULE(_radonfd, m) {
  m.doc() = "Fractional derivatives of Radon transforms and slicing inequalities";
  m.attr("__version__") = library_version();

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<FractionalOrder>(m, "FractionalOrder")
      .def(py::init<double, double>(), py::arg("q"), py::arg("guard_radius") = kDefaultGuardRadius)
      .def_static("continuous_limit", &FractionalOrder::continuous_limit, py::arg("q"),
                  py::arg("guard_radius") = kDefaultGuardRadius)
      .def_property_readonly("value", &FractionalOrder::value)
      .def_property_readonly("is_limit_order", &FractionalOrder::is_limit_order)
      .def("__float__", &FractionalOrder::value)
      .def("__repr__", [](const FractionalOrder& q) { return "FractionalOrder(" + std::to_string(q.value()) + ")"; });
  py::implicitly_convertible<double, FractionalOrder>();
  py::implicitly_convertible<int, FractionalOrder>();

  m.def("log_gamma", &log_gamma);
  m.def("fourier_power_constant", &fourier_power_constant, py::arg("lam"), py::arg("n"));
  m.def("ball_volume", &ball_volume);
  m.def("sphere_surface", &sphere_surface);
  m.def("ball_frac_deriv_closed_form", &ball_frac_deriv_closed_form, py::arg("n"), py::arg("q"));
  m.def("volume1_ball_value", &volume1_ball_value, py::arg("n"), py::arg("q"));
  m.def("theorem2_constant", &theorem2_constant, py::arg("n"), py::arg("q"));
  m.def("theorem2_exact_constant", &theorem2_exact_constant, py::arg("n"), py::arg("q"));
  m.def("kpz_dovr_bound", &kpz_dovr_bound, py::arg("n"), py::arg("q"), py::arg("C") = 1.0);
  m.def("theorem1_lower_bound", &theorem1_lower_bound, py::arg("n"), py::arg("q"), py::arg("c"));

  m.def(
      "frac_deriv",
      [](const std::function<double(double)>& h, double support, const FractionalOrder& q, bool even) {
        SectionFunction fn;
        fn.evaluate = h;
        fn.support_radius = support;
        fn.even = even;
        return frac_result(frac_deriv(fn, q));
      },
      py::arg("h"), py::arg("support"), py::arg("q"), py::arg("even") = false,
      "Fractional derivative at 0 of a function supported on [0, support].");
  m.def(
      "frac_deriv_named",
      [](const std::string& name, const FractionalOrder& q, double T, double param) {
        return frac_result(frac_deriv(section::by_name(name, T, param), q));
      },
      py::arg("name"), py::arg("q"), py::arg("T") = 1.0, py::arg("param") = 1.0);

  py::class_<StarBody>(m, "StarBody")
      .def_static("parse", &parse_body, py::arg("spec"), py::arg("n"))
      .def_static("ball", &StarBody::ball, py::arg("n"), py::arg("radius") = 1.0)
      .def_static("cube", &StarBody::cube, py::arg("n"), py::arg("half_width") = 1.0)
      .def_static("lp_ball", &StarBody::lp_ball, py::arg("n"), py::arg("p"), py::arg("scale") = 1.0)
      .def_static("ellipsoid", py::overload_cast<const Eigen::VectorXd&>(&StarBody::ellipsoid), py::arg("semi_axes"))
      .def_property_readonly("dimension", &StarBody::dimension)
      .def("minkowski", &StarBody::minkowski)
      .def("radial", [](const StarBody& K, const Eigen::VectorXd& v) { return K.radial(as_direction(v)); })
      .def("volume",
           [](const StarBody& K, std::size_t grid) { return body_volume(K, SphereGrid::make(K.dimension(), grid)); },
           py::arg("grid") = 20000)
      .def("scaled_to_volume_one", [](const StarBody& K) { return scale_to_volume_one(K); })
      .def("spec", &StarBody::spec)
      .def("__repr__", [](const StarBody& K) { return "StarBody('" + K.spec() + "')"; });

  py::class_<Density>(m, "Density")
      .def_static("parse", &parse_density)
      .def_static("uniform", &Density::uniform, py::arg("c") = 1.0)
      .def_static("gaussian", &Density::gaussian, py::arg("sigma"), py::arg("c") = 1.0)
      .def("__call__", &Density::operator())
      .def("spec", &Density::spec);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("direction_grid", &QuadratureSpec::direction_grid)
      .def_readwrite("section_grid", &QuadratureSpec::section_grid)
      .def_readwrite("section_tol", &QuadratureSpec::section_tol)
      .def_readwrite("radial_nodes", &QuadratureSpec::radial_nodes)
      .def_readwrite("volume_grid", &QuadratureSpec::volume_grid)
      .def_readwrite("singular_tol", &QuadratureSpec::singular_tol)
      .def_readwrite("bisection_tol", &QuadratureSpec::bisection_tol)
      .def_readwrite("refine_rounds", &QuadratureSpec::refine_rounds)
      .def_readwrite("use_analytic_oracles", &QuadratureSpec::use_analytic_oracles)
      .def_readwrite("seed", &QuadratureSpec::seed);

  m.def(
      "section_integral",
      [](const StarBody& K, const Density& f, const Eigen::VectorXd& xi, double t, const QuadratureSpec& quad) {
        return section_integral(K, f, as_direction(xi), t, quad);
      },
      py::arg("body"), py::arg("density"), py::arg("xi"), py::arg("t"), py::arg("quad") = QuadratureSpec{});
  m.def(
      "frac_radon",
      [](const StarBody& K, const Density& f, const Eigen::VectorXd& xi, const FractionalOrder& q,
         const QuadratureSpec& quad) {
        const auto r = frac_radon_at_zero(K, f, as_direction(xi), q, quad);
        py::dict d = frac_result(r.detail);
        d["normalized"] = r.normalized;
        d["raw"] = r.raw;
        d["estimated_error"] = r.estimated_error;
        return d;
      },
      py::arg("body"), py::arg("density"), py::arg("xi"), py::arg("q"), py::arg("quad") = QuadratureSpec{});
  m.def(
      "max_over_directions",
      [](const StarBody& K, const Density& f, const FractionalOrder& q, const QuadratureSpec& quad) {
        const auto r = max_over_directions(K, f, q, quad);
        py::dict d;
        d["value"] = r.value;
        d["raw"] = r.raw;
        d["direction"] = Eigen::VectorXd(r.direction);
        d["grid_value"] = r.grid_value;
        d["grid_mean"] = r.grid_mean;
        d["grid_size"] = r.grid_size;
        d["evaluations"] = r.evaluations;
        d["estimated_error"] = r.estimated_error;
        return d;
      },
      py::arg("body"), py::arg("density"), py::arg("q"), py::arg("quad") = QuadratureSpec{});

  py::class_<InequalityReport>(m, "InequalityReport")
      .def_readonly("check", &InequalityReport::check)
      .def_readonly("lhs", &InequalityReport::lhs)
      .def_readonly("rhs", &InequalityReport::rhs)
      .def_readonly("margin", &InequalityReport::margin)
      .def_readonly("relative_gap", &InequalityReport::relative_gap)
      .def_readonly("tolerance", &InequalityReport::tolerance)
      .def_readonly("passed", &InequalityReport::pass)
      .def_readonly("tight", &InequalityReport::tight)
      .def_property_readonly("status", [](const InequalityReport& r) { return std::string(to_string(r.status)); })
      .def_property_readonly("diagnostics",
                             [](const InequalityReport& r) {
                               py::dict d;
                               for (const auto& [k, v] : r.diagnostics) d[py::str(k)] = v;
                               return d;
                             })
      .def("to_json", [](const InequalityReport& r) { return report_to_json(r); });

  m.def("check_corollary1", [](int n, const FractionalOrder& q) { return check_corollary1(n, q); }, py::arg("n"),
        py::arg("q"));
  m.def(
      "check_parseval",
      [](const StarBody& K, double p, std::size_t grid, double tolerance) {
        return check_parseval(K, p, SphereGrid::make(K.dimension(), grid), tolerance);
      },
      py::arg("body"), py::arg("p"), py::arg("grid") = 20000, py::arg("tolerance") = 1e-3);
  m.def(
      "check_theorem2",
      [](const StarBody& K, const Density& f, const FractionalOrder& q, std::optional<double> dovr,
         const QuadratureSpec& quad) {
        const DovrBound bound = dovr ? DovrBound::user(*dovr) : default_dovr(K);
        return check_theorem2(K, f, q, bound, quad);
      },
      py::arg("body"), py::arg("density"), py::arg("q"), py::arg("dovr") = py::none(),
      py::arg("quad") = QuadratureSpec{});
  m.def(
      "check_theorem1",
      [](const StarBody& K, const Density& f, const FractionalOrder& q, double c, const QuadratureSpec& quad) {
        return check_theorem1(K, f, q, {.c = c}, quad);
      },
      py::arg("body"), py::arg("density"), py::arg("q"), py::arg("c"), py::arg("quad") = QuadratureSpec{});

  m.def(
      "verify",
      [](const std::string& check, const py::dict& settings) {
        auto config = config_from("verify", check, settings);
        const auto out = run_verify(config);
        return config.format == OutputFormat::Csv ? reports_document_csv(out.reports, config, out.notes)
                                                  : reports_document_json(out.reports, config, out.notes);
      },
      py::arg("check"), py::arg("settings") = py::dict(), "Runs a verification suite; returns the JSON or CSV document.");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
