#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octosl/error.hpp"
#include "octosl/invariants.hpp"
#include "octosl/json_io.hpp"
#include "octosl/quaternion_check.hpp"
#include "octosl/suites.hpp"

namespace py = pybind11;
using namespace octosl;

namespace {

Rho rho_from_entries(const std::array<Octonion::Coords, 4>& m) {
  return Rho::from_matrix(Octonion(m[0]), Octonion(m[1]), Octonion(m[2]),
                          Octonion(m[3]));
}

std::array<Octonion::Coords, 4> entries_of(const Rho& r) {
  const auto m = r.matrix();
  return {m[0].coords(), m[1].coords(), m[2].coords(), m[3].coords()};
}

Subspace subspace_of(const std::string& s) {
  if (s == "sl2o") return Subspace::SL2O;
  if (s == "su2o") return Subspace::SU2O;
  if (s == "su11o") return Subspace::SU11O;
  if (s == "sl2h") return Subspace::SL2H;
  throw PreconditionError("unknown subspace: " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Octonionic 2x2 invariants";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  // translators run newest first, so the subclass goes last
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<SingularError>(m, "SingularError", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Octonion>(m, "Octonion")
      .def(py::init<>())
      .def(py::init<const Octonion::Coords&>(), py::arg("coords"))
      .def_static("unit", &Octonion::unit)
      .def_property_readonly("coords", &Octonion::coords)
      .def("conj", &Octonion::conj)
      .def("norm", &Octonion::norm)
      .def("inverse", &Octonion::inverse)
      .def("__mul__", [](const Octonion& a, const Octonion& b) { return a * b; })
      .def("__add__", [](const Octonion& a, const Octonion& b) { return a + b; })
      .def("__sub__", [](const Octonion& a, const Octonion& b) { return a - b; })
      .def("__eq__", [](const Octonion& a, const Octonion& b) { return a == b; })
      .def("__repr__", [](const Octonion& a) {
        return "Octonion(" + py::repr(py::cast(a.coords())).cast<std::string>() + ")";
      });
  m.def("associator", &associator);

  // Rho values cross the boundary as four 8-vectors (phi1-, phi1+, phi2-, phi2+).
  m.def("reference", [] { return entries_of(Rho::reference()); });
  m.def("det", [](const std::array<Octonion::Coords, 4>& e) {
    return det_rho(rho_from_entries(e));
  }, py::arg("entries"));
  m.def("mu", [](const std::array<Octonion::Coords, 4>& e) {
    return mu(rho_from_entries(e));
  }, py::arg("entries"));
  m.def("grad_det", [](const std::array<Octonion::Coords, 4>& e) {
    return Eigen::VectorXd(grad_det(rho_from_entries(e)));
  }, py::arg("entries"));
  m.def("hessian_log_det", [](const std::array<Octonion::Coords, 4>& e) {
    return Eigen::MatrixXd(hessian_log_det(rho_from_entries(e)));
  }, py::arg("entries"));
  m.def("signature", [](const std::array<Octonion::Coords, 4>& e,
                        const std::string& subspace) {
    std::optional<QuaternionSubalgebra> h;
    const Subspace s = subspace_of(subspace);
    if (s == Subspace::SL2H) h = QuaternionSubalgebra::standard();
    const Signature sig = restricted_signature(rho_from_entries(e), s, h);
    return py::make_tuple(sig.positive, sig.negative, sig.zero);
  }, py::arg("entries"), py::arg("subspace") = "sl2o");
  m.def("su2_residual", [](const std::array<Octonion::Coords, 4>& e) {
    return duality_residual(rho_from_entries(e), su2_vector());
  }, py::arg("entries"));
  m.def("normalize", [](const std::array<Octonion::Coords, 4>& e) {
    const NormalForm nf = normalize(rho_from_entries(e));
    return py::dict(py::arg("rho") = entries_of(nf.rho),
                    py::arg("P") = Eigen::Matrix2d(nf.p),
                    py::arg("word") = to_json(nf.word).dump());
  }, py::arg("entries"));
  m.def("retract", [](const std::array<Octonion::Coords, 4>& e) {
    return entries_of(retract(rho_from_entries(e)));
  }, py::arg("entries"));

  m.def("qdet", [](const QuaternionEntries& e) {
    return qdet(QMat2::from_entries(e));
  }, py::arg("entries"));
  m.def("cdet", [](const QuaternionEntries& e) {
    return cdet_oracle(QMat2::from_entries(e));
  }, py::arg("entries"));

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& name, std::optional<int> samples,
                     std::optional<double> tol, std::uint64_t seed) {
    SuiteOptions opts;
    opts.samples = samples;
    opts.tolerance = tol;
    opts.seed = seed;
    const SuiteReport r = run_suite(name, opts);
    return py::dict(py::arg("suite") = r.name, py::arg("pass") = r.pass,
                    py::arg("max_residual") = r.max_residual,
                    py::arg("tolerance") = r.tolerance,
                    py::arg("samples") = r.samples, py::arg("seed") = r.seed);
  }, py::arg("suite"), py::arg("samples") = py::none(), py::arg("tol") = py::none(),
     py::arg("seed") = 42);
}
