#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hlkit/alphabet.hpp"
#include "hlkit/errors.hpp"
#include "hlkit/hall_littlewood.hpp"
#include "hlkit/identities.hpp"
#include "hlkit/io.hpp"
#include "hlkit/tableaux.hpp"

namespace py = pybind11;
using namespace hlkit;

namespace {

py::int_ big(const Integer& z) {
  if (z.fits_slong_p()) return py::int_(z.get_si());
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

/// {exponent: coefficient}
py::dict laurent(const LaurentPoly& p) {
  py::dict d;
  p.for_each_term([&](int e, const Integer& c) { d[py::int_(e)] = big(c); });
  return d;
}

py::tuple key(const std::vector<int>& v) {
  py::tuple k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = v[i];
  return k;
}

/// {partition tuple: {exponent: coefficient}}
py::dict expansion(const BasisExpansion& e) {
  py::dict d;
  for (const auto& [p, c] : e.coeffs()) d[key(p.parts())] = laurent(c);
  return d;
}

py::dict xpoly(const XPoly& f) {
  py::dict d;
  for (const auto& [e, c] : f.terms()) d[key(e)] = laurent(c);
  return d;
}

Partition part(const std::vector<int>& v) { return Partition(v); }

}  // namespace

PYBIND11_MODULE(_hlkit, m) {
  m.doc() = "Exact Hall-Littlewood computations. Polynomials in t come back as {exponent: coefficient}.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotAPartition>(m, "NotAPartition", PyExc_ValueError);
  py::register_exception<NonDominantWeight>(m, "NonDominantWeight", PyExc_ValueError);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);

  m.def("qprime", [](const std::vector<int>& lam, const std::string& basis) {
        return expansion(convert_basis(qprime_schur(part(lam)), parse_basis(basis)));
      },
      py::arg("lam"), py::arg("basis") = "S", "Q'_λ in the basis S or Qp.");
  m.def("qprime_text", [](const std::vector<int>& lam, const std::string& basis) {
        return convert_basis(qprime_schur(part(lam)), parse_basis(basis)).to_string();
      },
      py::arg("lam"), py::arg("basis") = "S");
  m.def("qprime_indexed", [](const std::vector<int>& v) { return expansion(qprime_indexed(v)); }, py::arg("v"),
        "Q'_v for an arbitrary integer vector, in the Q' basis.");
  m.def("qprime_eval", [](const std::vector<int>& lam, const std::string& alphabet, std::size_t nx, std::size_t ny) {
        return xpoly(qprime_eval(part(lam), parse_alphabet(alphabet, AlphabetContext::standard(nx, ny))));
      },
      py::arg("lam"), py::arg("alphabet"), py::arg("nx"), py::arg("ny") = 0,
      "Q'_λ on an alphabet such as '1-x1-x2'; keys are exponents of x1..x{nx}, y1..y{ny}.");
  m.def("aleph", [](const std::vector<int>& lam, const std::vector<int>& mu) { return laurent(aleph(part(lam), part(mu))); },
        py::arg("lam"), py::arg("mu"));
  m.def("aleph_column_rule",
        [](const std::vector<int>& lam, const std::vector<int>& mu) { return laurent(aleph_column_rule(part(lam), part(mu))); },
        py::arg("lam"), py::arg("mu"));
  m.def("add_one", [](const std::vector<int>& lam) { return expansion(add_one(part(lam))); }, py::arg("lam"));
  m.def("sub_one", [](const std::vector<int>& lam) { return expansion(sub_one(part(lam))); }, py::arg("lam"));
  m.def("plane_partition_qprime",
        [](const std::vector<int>& lam, std::size_t n) { return xpoly(plane_partition_qprime(part(lam), n)); },
        py::arg("lam"), py::arg("n"));

  m.def("charge", &charge, py::arg("word"));
  m.def("tableaux", [](const std::vector<int>& shape, const std::vector<int>& weight) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const Tableau& T : enumerate_ssyt(part(shape), weight)) out.push_back(T.rows());
        return out;
      },
      py::arg("shape"), py::arg("weight"));

  m.def("warnaar_check", &warnaar_check, py::arg("nx"), py::arg("ny"), py::arg("deg"));
  m.def("sigmaxy_check", &sigmaxy_check, py::arg("nx"), py::arg("ny"), py::arg("deg"));
  m.def("theta_scalar_check",
        [](const std::vector<int>& lam, const std::vector<int>& mu, std::size_t n) {
          return theta_scalar_check(part(lam), part(mu), n);
        },
        py::arg("lam"), py::arg("mu"), py::arg("n"));
  m.def("factor_check",
        [](const std::vector<int>& lam, std::size_t n, int r) { return one_minus_X_factorization_check(part(lam), r, n); },
        py::arg("lam"), py::arg("n"), py::arg("r") = 0);
  m.def("defq_note_holds", &defq_counterexample_check);
}
