#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "motint/arrangement.hpp"
#include "motint/engine.hpp"
#include "motint/errors.hpp"
#include "motint/forms_io.hpp"
#include "motint/oracle.hpp"
#include "motint/report.hpp"
#include "motint/witt.hpp"

namespace py = pybind11;
using namespace motint;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string integrate(unsigned n, const std::string& forms, const std::string& method) {
  const FormProduct fp = parse_forms(forms, n);
  MotivicResult r;
  if (method == "mainmc")
    r = integrate_product(fp);
  else if (method == "leuven")
    r = integrate_leuven(fp);
  else if (method == "auto")
    r = classify_validity(fp).mixed_char == MixedVerdict::OutsideBadPrimes ? integrate_leuven(fp) : integrate_product(fp);
  else
    throw DomainError("unknown method '" + method + "'");
  Json j;
  j["method"] = r.method;
  j["value"] = to_json(r.value);
  j["validity"] = to_json(r.validity);
  return j.dump();
}

std::string bracket(unsigned n, const std::string& forms, std::uint64_t q, unsigned depth, const std::string& setting) {
  const FormProduct fp = parse_forms(forms, n);
  std::uint64_t p;
  unsigned e;
  if (!split_prime_power(q, p, e)) throw DomainError(std::to_string(q) + " is not a prime power");
  if (setting == "zp") {
    if (e != 1) throw DomainError("the zp setting needs a prime q");
    return to_json(padic_bracket_zp(fp, p, depth)).dump();
  }
  if (setting == "wq") return to_json(padic_bracket_wq(fp, p, e, depth)).dump();
  if (setting == "equalchar") return to_json(equalchar_bracket(fp, q, depth)).dump();
  throw DomainError("unknown setting '" + setting + "'");
}

std::string arrangement(unsigned n, const std::string& eq, const std::string& neq, std::uint64_t p) {
  const StratumClass cls = stratum_class({n, parse_form_list(eq, n), parse_form_list(neq, n), p});
  Json j;
  j["text"] = cls.value.to_string();
  j["coeffs"] = to_json(cls.value);
  j["bad_primes"] = to_json(cls.bad_primes);
  return j.dump();
}

std::uint64_t count_points(unsigned n, const std::string& eq, const std::string& neq, std::uint64_t q) {
  return count_stratum_points({n, parse_form_list(eq, n), parse_form_list(neq, n), 0}, q);
}

std::string onevar(const std::string& poly, std::uint64_t p, const std::vector<unsigned>& degrees) {
  const OneVarResult r = integrate_onevar(parse_univariate(poly), p);
  Json j;
  j["class"] = r.cls.to_string();
  j["formula"] = r.formula();
  Json evals = Json::array();
  for (unsigned i : degrees) evals.push_back(to_fraction_string(r.evaluate(i)));
  j["evaluations"] = evals;
  return j.dump();
}

std::string witt_dump(std::uint64_t p, unsigned k) {
  std::ostringstream out;
  WittContext::get(p, k)->dump(out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact motivic integrals of products of linear forms";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("integrate", &integrate, py::arg("n"), py::arg("forms"), py::arg("method") = "auto");
  m.def("bracket", &bracket, py::arg("n"), py::arg("forms"), py::arg("q"), py::arg("depth"),
        py::arg("setting") = "zp");
  m.def("arrangement", &arrangement, py::arg("n"), py::arg("eq") = "", py::arg("neq") = "", py::arg("p") = 0);
  m.def("count_points", &count_points, py::arg("n"), py::arg("eq"), py::arg("neq"), py::arg("q"));
  m.def("onevar", &onevar, py::arg("poly"), py::arg("p"), py::arg("degrees") = std::vector<unsigned>{});
  m.def("witt_dump", &witt_dump, py::arg("p"), py::arg("k"));
}
