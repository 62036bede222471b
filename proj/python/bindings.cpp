#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bohrlab/cli.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/functions.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/subordination.hpp"
#include "bohrlab/suites.hpp"

namespace py = pybind11;
using namespace bohrlab;

namespace {

py::object growth_description(const GrowthClass& g) {
  if (std::holds_alternative<growth::BoundedBy>(g))
    return py::make_tuple("BoundedBy", std::get<growth::BoundedBy>(g).c);
  if (std::holds_alternative<growth::LinearBy>(g))
    return py::make_tuple("LinearBy", std::get<growth::LinearBy>(g).c);
  if (std::holds_alternative<growth::ExactGeometric>(g)) {
    const auto& e = std::get<growth::ExactGeometric>(g);
    return py::make_tuple("ExactGeometric", e.base, e.scale);
  }
  if (std::holds_alternative<growth::DominatedBy>(g)) return py::make_tuple("DominatedBy");
  return py::make_tuple("Unknown");
}

GrowthClass growth_from(const std::string& kind, double c, double base) {
  if (kind == "BoundedBy") return growth::BoundedBy{c};
  if (kind == "LinearBy") return growth::LinearBy{c};
  if (kind == "ExactGeometric") return growth::ExactGeometric{base, c};
  if (kind == "Unknown") return growth::Unknown{};
  throw py::value_error("unknown growth kind: " + kind);
}

}  // namespace

PYBIND11_MODULE(_bohrlab, m) {
  m.doc() = "Truncated power series, Bohr-type functionals, radius solvers and verification suites";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonVanishingConstantTerm>(m, "NonVanishingConstantTerm", PyExc_ValueError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
  py::register_exception<InvalidSeries>(m, "InvalidSeries", PyExc_ValueError);

  py::class_<TruncatedSeries>(m, "TruncatedSeries")
      .def(py::init([](std::vector<Complex> coeffs, const std::string& growth, double c, double base) {
             return TruncatedSeries(std::move(coeffs), growth_from(growth, c, base));
           }),
           py::arg("coeffs"), py::arg("growth") = "Unknown", py::arg("c") = 0.0, py::arg("base") = 0.0)
      .def_property_readonly("order", &TruncatedSeries::order)
      .def_property_readonly("coeffs",
                             [](const TruncatedSeries& s) {
                               return std::vector<Complex>(s.coeffs().begin(), s.coeffs().end());
                             })
      .def_property_readonly("growth", [](const TruncatedSeries& s) { return growth_description(s.growth()); })
      .def("__len__", [](const TruncatedSeries& s) { return s.order() + 1; })
      .def("__getitem__", [](const TruncatedSeries& s, std::size_t n) { return s[n]; })
      .def("__call__", [](const TruncatedSeries& s, Complex z) { return evaluate(s, z); })
      .def("__repr__", [](const TruncatedSeries& s) {
        std::ostringstream os;
        os << "TruncatedSeries(order=" << s.order() << ")";
        return os.str();
      });

  m.def("add", &add);
  m.def("multiply", &multiply);
  m.def("compose", &compose);
  m.def("evaluate", &evaluate);
  m.def("majorant_tail", &majorant_tail);
  m.def("square_tail", &square_tail);

  m.def("moebius_phi_a", &moebius_phi_a, py::arg("a"), py::arg("order") = kDefaultOrder);
  m.def("half_plane_map", &half_plane_map, py::arg("a0"), py::arg("order") = kDefaultOrder);
  m.def("koebe", &koebe, py::arg("order") = kDefaultOrder);
  m.def("identity_z", &identity_z, py::arg("order") = kDefaultOrder);
  m.def("one_series", &one_series, py::arg("order") = kDefaultOrder);
  m.def("random_schwarz", &random_schwarz, py::arg("seed"), py::arg("order"), py::arg("depth"));
  m.def("random_unit_bounded", &random_unit_bounded, py::arg("seed"), py::arg("order"), py::arg("depth"));

  py::class_<RadialEvalReport>(m, "RadialEvalReport")
      .def_readonly("r", &RadialEvalReport::r)
      .def_readonly("value", &RadialEvalReport::value)
      .def_readonly("tail", &RadialEvalReport::tail)
      .def_readonly("order_used", &RadialEvalReport::order_used);

  m.def("majorant", &majorant, py::arg("f"), py::arg("r"));
  m.def("norm_sq", &norm_sq, py::arg("f"), py::arg("r"));
  m.def("refined_functional", &refined_functional, py::arg("f"), py::arg("r"), py::arg("p") = 1.0);
  m.def("distance_form_T", &distance_form_T, py::arg("f"), py::arg("r"), py::arg("lam"));
  m.def("half_plane_closed_form", &half_plane_closed_form, py::arg("lam"), py::arg("r"));

  py::class_<RadiusResult>(m, "RadiusResult")
      .def_readonly("name", &RadiusResult::name)
      .def_readonly("value", &RadiusResult::value)
      .def_readonly("bracket_lo", &RadiusResult::bracket_lo)
      .def_readonly("bracket_hi", &RadiusResult::bracket_hi)
      .def_readonly("residual", &RadiusResult::residual)
      .def_readonly("iterations", &RadiusResult::iterations);

  m.def("phi_poly", &phi_poly, py::arg("lam"), py::arg("r"));
  m.def("psi_poly", &psi_poly, py::arg("lam"), py::arg("r"));
  m.def("classical_bohr_radius", &classical_bohr_radius);
  m.def("refined_radius", &refined_radius, py::arg("a0"));
  m.def("p_family_radius", &p_family_radius, py::arg("a0"), py::arg("p"));
  m.def("rstar_bisect", &rstar_bisect, py::arg("tol") = kDefaultTolerance);
  m.def("rstar_cardano", &rstar_cardano);
  m.def("solve_r0", &solve_r0, py::arg("a0"), py::arg("tol") = kDefaultTolerance);
  m.def("lambda_of_r", &lambda_of_r, py::arg("r"));
  m.def("solve_rg", &solve_rg, py::arg("tol") = kDefaultTolerance);

  py::class_<QuasiSubTriple>(m, "QuasiSubTriple")
      .def_readonly("phi", &QuasiSubTriple::phi)
      .def_readonly("omega", &QuasiSubTriple::omega)
      .def_readonly("g", &QuasiSubTriple::g)
      .def_readonly("f", &QuasiSubTriple::f);

  py::class_<VerificationRecord>(m, "VerificationRecord")
      .def_readonly("lhs", &VerificationRecord::lhs)
      .def_readonly("rhs", &VerificationRecord::rhs)
      .def_readonly("r", &VerificationRecord::r)
      .def_readonly("passed", &VerificationRecord::passed)
      .def_readonly("margin", &VerificationRecord::margin);

  m.def("build_quasi", &build_quasi, py::arg("phi"), py::arg("omega"), py::arg("g"));
  m.def("random_triple", &random_triple, py::arg("seed"), py::arg("order") = 128);
  m.def("verify_lemma1", &verify_lemma1, py::arg("t"), py::arg("r"), py::arg("exploratory") = false);
  m.def("verify_lemma2", &verify_lemma2, py::arg("t"), py::arg("r"), py::arg("exploratory") = false);
  m.def("verify_rogosinski", &verify_rogosinski, py::arg("t"), py::arg("r"));

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_property_readonly("family", [](const WitnessReport& w) { return family_name(w.family); })
      .def_readonly("parameter", &WitnessReport::parameter)
      .def_readonly("p", &WitnessReport::p)
      .def_readonly("threshold_found", &WitnessReport::threshold_found)
      .def_readonly("threshold_predicted", &WitnessReport::threshold_predicted);

  m.def("sharpness_witness_thmB", &sharpness_witness_thmB, py::arg("a"), py::arg("p"));
  m.def("witness_theorem1", &witness_theorem1, py::arg("a0"));
  m.def("witness_theorem3", &witness_theorem3, py::arg("lam") = 1.0, py::arg("order") = 256);

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, int trials, std::size_t order) {
        const auto rep = suites::run_suite(name, {seed, trials, order});
        py::dict d;
        d["name"] = rep.name;
        d["trials"] = rep.trials.size();
        d["violations"] = rep.violations();
        d["worst_margin"] = rep.worst_margin();
        d["passed"] = rep.passed();
        return d;
      },
      py::arg("name"), py::arg("seed") = 42, py::arg("trials") = 200, py::arg("order") = 128);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the bohrlab CLI in-process; returns (exit_code, stdout, stderr).");
}
