#include "ouroboros/cli.hpp"
#include "ouroboros/core.hpp"
#include "ouroboros/errors.hpp"
#include "ouroboros/explorer.hpp"
#include "ouroboros/expr.hpp"
#include "ouroboros/families.hpp"
#include "ouroboros/pde.hpp"
#include "ouroboros/probability.hpp"
#include "ouroboros/report_json.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ouroboros;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const json::Json& j) { return j.dump(); }

pde::PdeSpec make_spec(const std::string& eq, int n, int beta) {
  if (eq == "I") return pde::PdeSpec::eq1(n, beta > 0 ? beta : n);
  if (eq == "II") return pde::PdeSpec::eq2(n);
  throw InvalidArgument("equation must be 'I' or 'II'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the ouroboros package";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);
  static py::handle parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = parse_error(e.what());
      err.attr("offset") = e.offset();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    }
  });

  m.def("normalize", [](const std::string& text) { return expr::print(expr::parse(text)); }, py::arg("text"),
        "Parse an expression and print it in canonical form.");
  m.def("evaluate", [](const std::string& text, const std::vector<double>& x) { return expr::evaluate(expr::parse(text), x); },
        py::arg("expr"), py::arg("x"));
  m.def("differentiate", [](const std::string& text, int k) { return expr::print(expr::differentiate(expr::parse(text), k)); },
        py::arg("expr"), py::arg("k"));

  m.def("check_linear_exact",
        [](const std::vector<double>& coeffs, double tol) { return dump(json::to_json(core::check_linear_exact(core::LinearForm(coeffs), tol))); },
        py::arg("coeffs"), py::arg("tol") = 1e-12);
  m.def(
      "check_sampled",
      [](const std::string& text, int n, double radius, std::uint64_t seed, int count, double tol) {
        const auto parsed = expr::parse(text, n);
        return dump(json::to_json(core::check_sampled(parsed.expr, core::SampleDomain{std::max(parsed.dimension, 1), radius, seed, count}, tol)));
      },
      py::arg("expr"), py::arg("n") = 0, py::arg("radius") = 10.0, py::arg("seed") = 0, py::arg("count") = 200,
      py::arg("tol") = 1e-9);

  m.def(
      "check_residual",
      [](const std::string& text, const std::string& eq, int n, int beta, double radius, std::uint64_t seed, int count) {
        const auto parsed = expr::parse(text, n);
        const int dim = std::max(parsed.dimension, 1);
        return dump(json::to_json(pde::check_residual(parsed.expr, make_spec(eq, dim, beta), core::SampleDomain{dim, radius, seed, count})));
      },
      py::arg("expr"), py::arg("eq"), py::arg("n") = 0, py::arg("beta") = 0, py::arg("radius") = 2.0, py::arg("seed") = 0,
      py::arg("count") = 100);
  m.def("check_prop3", [](const std::vector<double>& c) { return dump(json::to_json(pde::check_prop3(c, static_cast<int>(c.size())))); },
        py::arg("coeffs"));
  m.def("verify_prop4", [](int n) { return dump(json::to_json(pde::verify_prop4(n, core::SampleDomain{n, 10.0, 0, 200}))); },
        py::arg("n"));
  m.def("prop2_mu", [](const std::vector<double>& c, int beta) { return families::prop2_solution(c, beta).mu_beta(); },
        py::arg("coeffs"), py::arg("beta"));

  m.def("expected_value",
        [](const std::vector<double>& v, const std::vector<double>& p) {
          return probability::expected_value(probability::DiscreteRandomVariable(v, p));
        },
        py::arg("values"), py::arg("probs"));
  m.def("check_expectation",
        [](const std::vector<double>& v, const std::vector<double>& p, double tol) {
          return dump(json::to_json(probability::check_expectation_ouroboros(probability::DiscreteRandomVariable(v, p), tol)));
        },
        py::arg("values"), py::arg("probs"), py::arg("tol") = 1e-12);

  m.def(
      "explore",
      [](int n, int degree, int starts, std::uint64_t seed, int samples, bool mean_init) {
        explorer::ExplorationConfig c;
        c.n = n;
        c.degree = degree;
        c.starts = starts;
        c.seed = seed;
        c.samples = samples;
        c.init = mean_init ? explorer::InitMode::Mean : explorer::InitMode::Random;
        c.validate();
        py::gil_scoped_release release;
        return dump(json::to_json(explorer::explore(c)));
      },
      py::arg("n") = 2, py::arg("degree") = 2, py::arg("starts") = 20, py::arg("seed") = 0, py::arg("samples") = 0,
      py::arg("mean_init") = false);
  m.def("linear_case_exact", [](int n) { return dump(json::to_json(explorer::linear_case_exact(n))); }, py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one command line in-process; returns (exit_code, stdout, stderr).");
}
