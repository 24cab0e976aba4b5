#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "discoh/cohomology.hpp"
#include "discoh/resolution.hpp"
#include "discoh/serialize.hpp"

namespace py = pybind11;
using namespace discoh;

namespace {

// Rationals cross the boundary as strings; the Python wrapper turns them into Fractions.
std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::string mu_json(int n, int ell, int q, const std::vector<std::string>& lambda, bool closed_form) {
  const ArrangementParams p(n, ell);
  const auto w = parse_all(lambda);
  const auto m = closed_form ? mu_closed_form(p, q, w) : mu_naive(p, q, w);
  return matrix_to_json(n, ell, q, m).dump();
}

}  // namespace

PYBIND11_MODULE(_discoh, m) {
  m.doc() = "Cohomology of discriminantal arrangements with rank-one local systems.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("hyperplane_count", [](int n, int ell) { return ArrangementParams(n, ell).hyperplane_count(); });
  m.def("degree_dims", [](int n, int ell) { return degree_dims(ArrangementParams(n, ell)); });
  m.def("basis_json", [](int n, int ell, int q) { return basis_to_json(enumerate_basis(n, ell, q)).dump(); });
  m.def("mu_json", &mu_json, py::arg("n"), py::arg("ell"), py::arg("q"), py::arg("weights"),
        py::arg("closed_form") = true);
  m.def("boundary_json", [](int n, int ell, int q, const std::vector<std::string>& t) {
    return matrix_to_json(n, ell, q, boundary_eval(ArrangementParams(n, ell), q, parse_all(t))).dump();
  });
  m.def("boundary_derivative_json", [](int n, int ell, int q, const std::vector<std::string>& lambda) {
    return matrix_to_json(n, ell, q, boundary_derivative(ArrangementParams(n, ell), q, parse_all(lambda))).dump();
  });
  m.def("os_betti_json", [](int n, int ell, const std::vector<std::string>& lambda) {
    return betti_to_json(os_betti(ArrangementParams(n, ell), parse_all(lambda))).dump();
  });
  m.def("local_betti_json", [](int n, int ell, const std::vector<std::string>& t) {
    return betti_to_json(local_betti(ArrangementParams(n, ell), parse_all(t))).dump();
  });
  m.def(
      "local_betti_cyclotomic_json",
      [](int n, int ell, const std::vector<std::string>& lambda, std::vector<std::uint64_t> primes) {
        py::gil_scoped_release release;
        return betti_to_json(local_betti_cyclotomic(ArrangementParams(n, ell), parse_all(lambda), primes)).dump();
      },
      py::arg("n"), py::arg("ell"), py::arg("weights"), py::arg("primes") = std::vector<std::uint64_t>{});
  m.def(
      "verify_linearization_json",
      [](int n, int ell, std::optional<std::vector<std::string>> lambda) {
        std::optional<WeightVector> w;
        if (lambda) w = parse_all(*lambda);
        return linearization_to_json(verify_linearization(ArrangementParams(n, ell), w)).dump();
      },
      py::arg("n"), py::arg("ell"), py::arg("weights") = py::none());
  m.def("resonance_membership", [](int n, int ell, int k, int depth, const std::vector<std::string>& lambda) {
    return resonance_membership(ArrangementParams(n, ell), k, depth, parse_all(lambda));
  });
  m.def(
      "sandwich_json",
      [](int n, int ell, const std::vector<std::string>& lambda, std::vector<std::uint64_t> primes) {
        return sandwich_to_json(sandwich_check(ArrangementParams(n, ell), parse_all(lambda), primes)).dump();
      },
      py::arg("n"), py::arg("ell"), py::arg("weights"), py::arg("primes") = std::vector<std::uint64_t>{});
  m.def("generic_betti", [](int n, int ell) { return generic_betti(ArrangementParams(n, ell)); });
}
