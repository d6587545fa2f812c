#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilnorm/normalform.hpp"
#include "nilnorm/verify.hpp"

namespace py = pybind11;
using namespace nilnorm;

namespace {

Dim as_dim(int d) {
  if (d == 2) return Dim::d2;
  if (d == 3) return Dim::d3;
  throw std::invalid_argument("dim must be 2 or 3");
}

OrbitElement as_elem(Dim d, py::tuple t) {
  if (t.size() == 2) return OrbitElement(d, t[0].cast<int>(), t[1].cast<int>());
  if (t.size() == 3) return OrbitElement(d, t[0].cast<int>(), t[1].cast<int>(), t[2].cast<int>());
  throw std::invalid_argument("element tuple must be (l, mu) or (l, mu, k)");
}

py::dict comb_as_dict(const LieComb& c) {
  py::dict out;
  for (const auto& [e, v] : c.terms())
    out[py::make_tuple(e.l, e.mu, e.k)] = v.str();
  return out;
}

}  // namespace

PYBIND11_MODULE(_nilnorm, m) {
  m.doc() = "Exact structure constants and multi-level normal forms for Euler-family vector fields";

  m.def("binom", [](long a, long b) { return binom(a, b).str(); }, py::arg("a"), py::arg("b"),
        "Binomial coefficient with the out-of-range-is-zero convention, as a string");
  m.def("factorial", [](long n) { return factorial(n).get_str(); }, py::arg("n"));
  m.def("cgc", [](int m_, int n, int p, int i, int j, int k) { return cgc_3j(m_, n, p, i, j, k).str(); },
        py::arg("m"), py::arg("n"), py::arg("p"), py::arg("i"), py::arg("j"), py::arg("k"),
        "Rational Clebsch-Gordan coefficient (3j-symbol)");
  m.def("lambda_coeff",
        [](int l1, int mu1, int l2, int mu2, int rho) { return lambda_coeff(l1, mu1, l2, mu2, rho).str(); },
        py::arg("l1"), py::arg("mu1"), py::arg("l2"), py::arg("mu2"), py::arg("rho"));
  m.def("transvectant_norm_sq", [](int m_, int n, int p) { return transvectant_norm_sq(m_, n, p).str(); });
  m.def("transvectant", [](int m_, int n, int p) {
    py::dict out;
    for (const auto& [ij, c] : transvectant(m_, n, p).terms) out[py::make_tuple(ij.first, ij.second)] = c.str();
    return out;
  });
  m.def("orbit_transvectant", [](int m_, int n, int p, int k) {
    py::dict out;
    for (const auto& [ij, c] : orbit_transvectant(m_, n, p, k).terms)
      out[py::make_tuple(ij.first, ij.second)] = c.str();
    return out;
  });
  m.def("invert_tensor", [](int m_, int n, int i, int j) {
    py::dict out;
    for (const auto& [pk, c] : invert_tensor(m_, n, i, j).terms) out[py::make_tuple(pk.first, pk.second)] = c.str();
    return out;
  });
  m.def("product_orbit", [](int dim, py::tuple a, py::tuple b) {
    Dim d = as_dim(dim);
    OrbitElement e1 = as_elem(d, a), e2 = as_elem(d, b);
    py::dict out;
    for (const auto& [of, c] : product_orbit(d, e1.function(), e2.function()))
      out[py::make_tuple(static_cast<int>(of.l), static_cast<int>(of.base.mu), static_cast<int>(of.base.k))] =
          c.str();
    return out;
  }, py::arg("dim"), py::arg("a"), py::arg("b"),
     "Orbit expansion of realize(a) * realize(b); keys are (l, mu, k)");
  m.def("bracket", [](int dim, py::tuple a, py::tuple b) {
    Dim d = as_dim(dim);
    return comb_as_dict(bracket(as_elem(d, a), as_elem(d, b)));
  }, py::arg("dim"), py::arg("a"), py::arg("b"),
     "Structure constants of [A_a, A_b]; keys are (l, mu, k)");
  m.def("bracket_filtered", [](int dim, py::tuple a, py::tuple b, int kmax) {
    Dim d = as_dim(dim);
    return comb_as_dict(bracket_filtered(as_elem(d, a), as_elem(d, b), kmax));
  });
  m.def("realize", [](int dim, int l, int mu, int k) {
    return realize(OrbitFunction(as_dim(dim), l, mu, k)).str();
  }, py::arg("dim"), py::arg("l"), py::arg("mu"), py::arg("k") = 0);
  m.def("to_orbit_coords", [](int dim, const std::string& poly) {
    Dim d = as_dim(dim);
    py::dict out;
    for (const auto& [of, c] : to_orbit_coords(CoordPoly::parse(d, poly)))
      out[py::make_tuple(static_cast<int>(of.l), static_cast<int>(of.base.mu), static_cast<int>(of.base.k))] =
          c.str();
    return out;
  });
  m.def("normal_form", [](const std::string& problem_json, int levels) {
    return normal_form(NFProblem::from_json(problem_json), levels).json();
  }, py::arg("problem_json"), py::arg("levels") = 3,
     "Run the multi-level pipeline; input and output are JSON strings");
  m.def("verify", [](bool quick) {
    py::list out;
    for (const CheckResult& r : run_verification(quick)) out.append(py::make_tuple(r.name, r.pass, r.detail));
    return out;
  }, py::arg("quick") = true, "Closed-form-vs-oracle identity suite; returns (name, pass, detail) tuples");
}
