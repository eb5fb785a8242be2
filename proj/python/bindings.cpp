#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "compdet/closed_forms.hpp"
#include "compdet/combinatorics.hpp"
#include "compdet/determinant.hpp"
#include "compdet/errors.hpp"
#include "compdet/serialize.hpp"
#include "compdet/verifier.hpp"

namespace py = pybind11;
using namespace compdet;

namespace {

using Parts = std::vector<std::uint32_t>;

Assignment to_assignment(const std::map<std::string, std::string>& values, std::size_t nvars) {
  Assignment a(nvars);
  for (const auto& [name, value] : values) a.set(name, parse_rational(value));
  return a;
}

std::vector<Parts> to_parts(const std::vector<Composition>& cs) {
  std::vector<Parts> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.emplace_back(c.parts().begin(), c.parts().end());
  return out;
}

Domain domain_of(bool positive) { return positive ? Domain::Positive : Domain::All; }

std::string report_json(const VerificationReport& r) { return report_to_json(r, false).dump(); }

std::vector<std::string> reports_json(const std::vector<VerificationReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(report_json(r));
  return out;
}

// Determinant of the family's matrix after substituting the given values;
// a rational string when everything is assigned, a polynomial string otherwise.
std::string determinant(const std::string& family, std::int64_t n, std::int64_t k, const std::string& domain,
                        const std::map<std::string, std::string>& values, const std::string& backend) {
  if (backend != "bareiss" && backend != "laplace") throw ParameterError("unknown backend '" + backend + "'");
  const EntryFamily f = parse_family(family);
  const Domain d = parse_domain(domain);
  check_parameters(n, k, d);
  const Assignment a = to_assignment(values, static_cast<std::size_t>(2 * k));
  if (a.is_complete()) {
    const auto m = build_numeric_matrix(f, d, n, k, a);
    return (backend == "laplace" ? det_laplace(m) : det_bareiss(m)).get_str();
  }
  auto m = build_matrix(f, d, n, k).entries;
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) m(r, c) = m(r, c).partial_evaluate(a);
  }
  return (backend == "laplace" ? det_laplace(m) : det_bareiss(m)).to_string();
}

}  // namespace

PYBIND11_MODULE(_compdet, m) {
  m.doc() = "Exact composition-indexed determinants";

  auto base = py::register_exception<Error>(m, "CompdetError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<LookupError>(m, "LookupError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ContextError>(m, "ContextError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, std::size_t nvars) { return parse_polynomial(text, nvars); }),
           py::arg("text"), py::arg("num_variables"))
      .def_property_readonly("num_variables", &Polynomial::num_variables)
      .def_property_readonly("num_terms", &Polynomial::num_terms)
      .def("total_degree", &Polynomial::total_degree)
      .def("homogeneous_component", &Polynomial::homogeneous_component)
      .def("evaluate",
           [](const Polynomial& p, const std::map<std::string, std::string>& values) {
             return p.evaluate(to_assignment(values, p.num_variables())).get_str();
           })
      .def("is_zero", &Polynomial::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const Polynomial& p, std::uint64_t e) { return p.pow(e); })
      .def("__floordiv__", [](const Polynomial& a, const Polynomial& b) { return exact_div(a, b); })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  m.def(
      "compositions", [](std::int64_t n, std::int64_t k, bool positive) { return to_parts(enumerate(n, k, domain_of(positive))); },
      py::arg("n"), py::arg("k"), py::arg("positive") = false);
  m.def(
      "count", [](std::int64_t n, std::int64_t k, bool positive) { return count(n, k, domain_of(positive)); },
      py::arg("n"), py::arg("k"), py::arg("positive") = false);

  m.def(
      "matrix_json",
      [](const std::string& family, std::int64_t n, std::int64_t k, const std::string& domain) {
        return matrix_to_json(build_matrix(parse_family(family), parse_domain(domain), n, k)).dump();
      },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("domain") = "all");
  m.def("determinant", &determinant, py::arg("family"), py::arg("n"), py::arg("k"), py::arg("domain") = "all",
        py::arg("values") = std::map<std::string, std::string>{}, py::arg("backend") = "bareiss");

  m.def(
      "rhs_json", [](const std::string& id, std::int64_t n, std::int64_t k) {
        return factored_to_json(rhs(parse_theorem(id), n, k)).dump();
      },
      py::arg("theorem"), py::arg("n"), py::arg("k"));
  m.def(
      "rhs_expanded", [](const std::string& id, std::int64_t n, std::int64_t k) { return rhs(parse_theorem(id), n, k).expand(); },
      py::arg("theorem"), py::arg("n"), py::arg("k"));
  m.def(
      "theorem_determinant",
      [](const std::string& id, std::int64_t n, std::int64_t k) { return theorem_determinant(parse_theorem(id), n, k); },
      py::arg("theorem"), py::arg("n"), py::arg("k"));

  m.def(
      "verify_symbolic",
      [](const std::string& id, std::int64_t n, std::int64_t k, std::size_t cap) {
        py::gil_scoped_release release;
        return report_json(verify_symbolic(parse_theorem(id), n, k, {.max_order = cap}));
      },
      py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("cap") = 15);
  m.def(
      "verify_numeric",
      [](const std::string& id, std::int64_t n, std::int64_t k, std::uint64_t trials, std::uint64_t seed) {
        py::gil_scoped_release release;
        return report_json(verify_numeric(parse_theorem(id), n, k, trials, seed));
      },
      py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("trials") = 20, py::arg("seed") = 0);
  m.def(
      "verify_kernel",
      [](std::int64_t n, std::int64_t k, std::int64_t i, const Parts& eps) {
        return report_json(verify_kernel(n, k, i, Composition(eps)));
      },
      py::arg("n"), py::arg("k"), py::arg("i"), py::arg("eps"));
  m.def(
      "verify_specializations", [](std::int64_t n, std::int64_t k) { return reports_json(verify_specializations(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "verify_lemmas", [](std::int64_t n_max, std::int64_t k_max) { return reports_json(verify_lemmas(n_max, k_max)); },
      py::arg("n_max"), py::arg("k_max"));
  m.def(
      "run_suite",
      [](std::int64_t n_max, std::int64_t k_max, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return reports_json(
            run_suite({.n_max = n_max, .k_max = k_max, .trials = trials, .seed = seed, .max_order = 15, .threads = threads}));
      },
      py::arg("n_max") = 3, py::arg("k_max") = 3, py::arg("trials") = 20, py::arg("seed") = 0, py::arg("threads") = 0);

  m.def(
      "factorial_product", [](std::int64_t n, std::int64_t k) { return factorial_product(n, k).get_str(); },
      py::arg("n"), py::arg("k"));
  m.def(
      "theorems", [] {
        std::vector<std::string> out;
        for (TheoremId id : kAllTheorems) out.emplace_back(to_string(id));
        return out;
      });
}
