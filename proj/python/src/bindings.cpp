#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <vector>

#include "fpj/errors.hpp"
#include "fpj/expansion.hpp"
#include "fpj/expression.hpp"
#include "fpj/hadamard.hpp"
#include "fpj/hypergeometric.hpp"
#include "fpj/jacobi.hpp"
#include "fpj/special_functions.hpp"

namespace py = pybind11;
using fpj::Complex;

namespace {

fpj::ParamMode mode(bool strict) { return strict ? fpj::ParamMode::strict : fpj::ParamMode::permissive; }

fpj::ChebyshevModel to_model(const py::object& g, std::size_t degree) {
  if (py::isinstance<fpj::ChebyshevModel>(g)) return g.cast<fpj::ChebyshevModel>();
  if (py::isinstance<py::str>(g)) {
    const auto expr = fpj::parse_expression(g.cast<std::string>());
    return fpj::chebyshev_fit([&expr](double x) { return expr(Complex(x, 0.0)); }, degree);
  }
  auto f = g.cast<std::function<Complex(double)>>();
  return fpj::chebyshev_fit(f, degree);
}

// Expansion together with the basis it refers to.
struct PyExpansion {
  fpj::JacobiExpansion expansion;
  std::shared_ptr<const fpj::JacobiBasis> basis;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jacobi polynomials with complex parameters, finite-part integrals and a hypergeometric solver";

  auto base = py::register_exception<fpj::Error>(m, "FpjError", PyExc_RuntimeError);
  py::register_exception<fpj::PoleError>(m, "PoleError", base);
  py::register_exception<fpj::InvalidParameters>(m, "InvalidParameters", base);
  py::register_exception<fpj::DegreeCapExceeded>(m, "DegreeCapExceeded", base);
  py::register_exception<fpj::RecurrenceBreakdown>(m, "RecurrenceBreakdown", base);
  py::register_exception<fpj::NonConvergent>(m, "NonConvergent", base);
  py::register_exception<fpj::QuadratureFailure>(m, "QuadratureFailure", base);
  py::register_exception<fpj::EvaluationFailure>(m, "EvaluationFailure", base);
  py::register_exception<fpj::InsufficientData>(m, "InsufficientData", base);
  py::register_exception<fpj::ResonantEigenvalue>(m, "ResonantEigenvalue", base);
  py::register_exception<fpj::ParseError>(m, "ParseError", base);

  m.def("gamma", &fpj::complex_gamma, py::arg("z"));
  m.def("log_gamma", &fpj::log_gamma, py::arg("z"));
  m.def("reciprocal_gamma", &fpj::reciprocal_gamma, py::arg("z"));
  m.def("pochhammer", &fpj::pochhammer, py::arg("a"), py::arg("n"));
  m.def("beta_fp", &fpj::beta_fp, py::arg("a"), py::arg("b"),
        "Beta function continued to all a, b off the poles of Gamma(a) and Gamma(b)");

  py::class_<fpj::JacobiParams>(m, "JacobiParams")
      .def(py::init([](Complex alpha, Complex beta, bool strict) {
             return fpj::JacobiParams(alpha, beta, mode(strict));
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("strict") = false)
      .def_property_readonly("alpha", &fpj::JacobiParams::alpha)
      .def_property_readonly("beta", &fpj::JacobiParams::beta)
      .def_property_readonly("classical", &fpj::JacobiParams::classical)
      .def("__repr__", [](const fpj::JacobiParams& p) {
        return "JacobiParams(alpha=" + py::repr(py::cast(p.alpha())).cast<std::string>() +
               ", beta=" + py::repr(py::cast(p.beta())).cast<std::string>() + ")";
      });

  m.def("jacobi_rodrigues",
        [](const fpj::JacobiParams& p, std::size_t n, std::size_t cap) {
          return fpj::jacobi_rodrigues(p, n, cap).coeffs();
        },
        py::arg("params"), py::arg("n"), py::arg("cap") = fpj::kDefaultDegreeCap,
        "Power-basis coefficients of p_n, lowest degree first");
  m.def("jacobi_via_recurrence",
        [](const fpj::JacobiParams& p, std::size_t n, std::size_t cap) {
          return fpj::jacobi_via_recurrence(p, n, cap).coeffs();
        },
        py::arg("params"), py::arg("n"), py::arg("cap") = fpj::kDefaultDegreeCap);
  m.def("leading_coefficient", &fpj::leading_coefficient, py::arg("params"), py::arg("n"));
  m.def("norm_an", &fpj::norm_an, py::arg("params"), py::arg("n"));

  py::class_<fpj::JacobiBasis, std::shared_ptr<fpj::JacobiBasis>>(m, "JacobiBasis")
      .def(py::init<fpj::JacobiParams, std::size_t, std::size_t>(), py::arg("params"), py::arg("n_max"),
           py::arg("cap") = fpj::kDefaultDegreeCap)
      .def_property_readonly("params", &fpj::JacobiBasis::params)
      .def_property_readonly("n_max", &fpj::JacobiBasis::n_max)
      .def("poly", [](const fpj::JacobiBasis& b, std::size_t n) { return b.poly(n).coeffs(); })
      .def("norm", &fpj::JacobiBasis::norm)
      .def("gram_entry", &fpj::JacobiBasis::gram_entry, py::arg("n"), py::arg("k"))
      .def("gram_matrix",
           [](const fpj::JacobiBasis& b) {
             std::vector<std::vector<Complex>> g(b.n_max() + 1, std::vector<Complex>(b.n_max() + 1));
             for (std::size_t n = 0; n <= b.n_max(); ++n) {
               for (std::size_t k = 0; k <= n; ++k) g[n][k] = g[k][n] = b.gram_entry(n, k);
             }
             return g;
           })
      .def("evaluate", &fpj::JacobiBasis::evaluate, py::arg("n"), py::arg("x"));

  m.def("finite_part_series",
        [](Complex alpha, std::vector<Complex> coeffs, double x) {
          return fpj::finite_part_series(alpha, fpj::TaylorPiece{fpj::Endpoint::zero, std::move(coeffs)}, x);
        },
        py::arg("alpha"), py::arg("coeffs"), py::arg("x"),
        "Finite part of the integral of t^(alpha-1) f(t) over [0, x] for f = sum coeffs[n] t^n");
  m.def("finite_part_poly_weight",
        [](const fpj::JacobiParams& p, std::vector<Complex> coeffs) {
          return fpj::finite_part_poly_weight(p, fpj::DensePoly(std::move(coeffs)));
        },
        py::arg("params"), py::arg("coeffs"));
  m.def("finite_part_split",
        [](const fpj::JacobiParams& p, std::vector<Complex> coeffs, double split, std::optional<std::size_t> order) {
          fpj::SplitOptions options;
          options.split = split;
          options.order = order;
          return fpj::finite_part_split(p, fpj::EndpointFunction::from_polynomial(fpj::DensePoly(std::move(coeffs))),
                                        options);
        },
        py::arg("params"), py::arg("coeffs"), py::arg("split") = 0.5, py::arg("order") = py::none());

  py::class_<fpj::ChebyshevModel>(m, "ChebyshevModel")
      .def(py::init<std::vector<Complex>>(), py::arg("coeffs"))
      .def_property_readonly("coeffs", &fpj::ChebyshevModel::coeffs)
      .def_property_readonly("degree", &fpj::ChebyshevModel::degree)
      .def_property_readonly("decay_rate", &fpj::ChebyshevModel::decay_rate)
      .def("__call__", &fpj::ChebyshevModel::operator(), py::arg("x"));
  m.def("chebyshev_fit", &fpj::chebyshev_fit, py::arg("f"), py::arg("degree"));

  py::class_<PyExpansion>(m, "JacobiExpansion")
      .def_property_readonly("coeffs", [](const PyExpansion& e) { return e.expansion.coeffs; })
      .def_property_readonly("n_trunc", [](const PyExpansion& e) { return e.expansion.n_trunc; })
      .def_property_readonly("tail_estimate", [](const PyExpansion& e) { return e.expansion.tail_estimate; })
      .def_property_readonly("rho",
                             [](const PyExpansion& e) -> std::optional<double> {
                               if (e.expansion.domain) return e.expansion.domain->rho;
                               return std::nullopt;
                             })
      .def("convergence_estimate", [](const PyExpansion& e) { return fpj::convergence_estimate(e.expansion); })
      .def("__call__", [](const PyExpansion& e, Complex x) {
        return fpj::evaluate_expansion(e.expansion, *e.basis, x);
      });

  m.def("expand",
        [](const fpj::JacobiParams& p, const py::object& f, std::size_t n, std::optional<std::size_t> degree) {
          auto basis = std::make_shared<fpj::JacobiBasis>(p, n);
          const auto model = to_model(f, degree.value_or(fpj::default_sampling_degree(n)));
          return PyExpansion{fpj::expansion_coefficients(*basis, model, n), basis};
        },
        py::arg("params"), py::arg("f"), py::arg("n"), py::arg("sampling_degree") = py::none(),
        "Jacobi coefficients of f (a callable, an expression string or a ChebyshevModel)");

  m.def("lambda_n", &fpj::lambda_n, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("check_resonance", &fpj::check_resonance, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n_max"),
        py::arg("tol") = 1e-8);

  py::class_<fpj::HypergeomSolution>(m, "HypergeomSolution")
      .def_property_readonly("coeffs", [](const fpj::HypergeomSolution& s) { return s.expansion.coeffs; })
      .def_readonly("g_coeffs", &fpj::HypergeomSolution::g_coeffs)
      .def_readonly("resonance_margin", &fpj::HypergeomSolution::resonance_margin)
      .def_readonly("resonances", &fpj::HypergeomSolution::resonances)
      .def_readonly("warnings", &fpj::HypergeomSolution::warnings)
      .def_property_readonly("params", [](const fpj::HypergeomSolution& s) { return s.expansion.params; })
      .def("__call__", [](const fpj::HypergeomSolution& s, Complex x) {
        return fpj::evaluate_expansion(s.expansion, *s.basis, x);
      });

  m.def("solve",
        [](Complex a, Complex b, Complex c, const py::object& g, std::optional<std::size_t> n_max,
           std::optional<std::size_t> degree, double tolerance, bool strict) {
          const std::size_t m = degree.value_or(fpj::default_sampling_degree(n_max.value_or(fpj::kDefaultDegreeCap)));
          fpj::HypergeomProblem problem{a, b, c, to_model(g, m), mode(strict)};
          fpj::SolveOptions options;
          options.resonance_tolerance = tolerance;
          auto sol = fpj::solve(problem, n_max, options);
          const double res = fpj::residual(problem, sol, fpj::uniform_grid(101));
          return py::make_tuple(std::move(sol), res);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("g"), py::arg("n_max") = py::none(),
        py::arg("sampling_degree") = py::none(), py::arg("tolerance") = 1e-8, py::arg("strict") = false,
        "Solve x(1-x)u'' + (a(1-x) - b x)u' + c u = g; returns (solution, residual on 101 points)");

  py::class_<fpj::Expression>(m, "Expression")
      .def("__call__", &fpj::Expression::operator(), py::arg("x"));
  m.def("parse_expression", [](const std::string& s) { return fpj::parse_expression(s); }, py::arg("source"));
  m.def("parse_complex", [](const std::string& s) { return fpj::parse_complex(s); }, py::arg("source"));
}
