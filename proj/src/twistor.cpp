#include "octosl/twistor.hpp"

#include <algorithm>
#include <cmath>

#include "octosl/error.hpp"
#include "octosl/invariants.hpp"

namespace octosl {

Twistor::Twistor(Duality d, const Spinor& lo, const Spinor& hi)
    : duality(d), phi_minus(lo), phi_plus(hi) {
  if (lo.chirality != lo_chirality(d) || hi.chirality != opposite(lo.chirality))
    throw PreconditionError("twistor: chirality tags disagree with duality");
}

Twistor Twistor::primal(const Octonion& lo, const Octonion& hi) {
  return {Duality::Primal, Spinor::minus(lo), Spinor::plus(hi)};
}

Twistor Twistor::dual(const Octonion& lo, const Octonion& hi) {
  return {Duality::Dual, Spinor::plus(lo), Spinor::minus(hi)};
}

Twistor Twistor::zero(Duality d) {
  return d == Duality::Primal ? primal({}, {}) : dual({}, {});
}

Twistor operator+(const Twistor& a, const Twistor& b) {
  if (a.duality != b.duality)
    throw PreconditionError("twistor sum: duality mismatch");
  return {a.duality, a.phi_minus + b.phi_minus, a.phi_plus + b.phi_plus};
}

Twistor operator-(const Twistor& a, const Twistor& b) {
  return a + (-1.0) * b;
}

Twistor operator*(double s, const Twistor& a) {
  return {a.duality, s * a.phi_minus, s * a.phi_plus};
}

double max_abs_difference(const Twistor& a, const Twistor& b) {
  const Twistor d = a - b;
  return std::max(max_abs(d.phi_minus.coords), max_abs(d.phi_plus.coords));
}

Spinor evaluate(const Twistor& psi, const Vector8& x) {
  return clifford(x, psi.phi_minus) + psi.phi_plus;
}

namespace {

struct TwistorActionVisitor {
  const Twistor& psi;

  Twistor operator()(const Translation& g) const {
    return {psi.duality, psi.phi_minus,
            clifford(g.t, psi.phi_minus) + psi.phi_plus};
  }
  Twistor operator()(const Reflection& g) const {
    return {flip(psi.duality), -clifford(g.normal(), psi.phi_minus),
            clifford(g.normal(), psi.phi_plus)};
  }
  Twistor operator()(const Inversion&) const {
    return {flip(psi.duality), psi.phi_plus, -psi.phi_minus};
  }
  Twistor operator()(const Dilation& g) const {
    const double s = std::sqrt(g.lambda());
    return {psi.duality, s * psi.phi_minus, (1.0 / s) * psi.phi_plus};
  }
};

}  // namespace

Twistor act(const ConformalGenerator& g, const Twistor& psi) {
  return std::visit(TwistorActionVisitor{psi}, g);
}

Twistor act(const ConformalWord& w, const Twistor& psi) {
  Twistor out = psi;
  for (const auto& g : w.letters()) out = act(g, out);
  return out;
}

double dual_pairing(const Twistor& a, const Twistor& b) {
  if (a.duality == b.duality)
    throw PreconditionError("dual_pairing: needs one primal and one dual");
  const Twistor& p = a.duality == Duality::Primal ? a : b;
  const Twistor& d = a.duality == Duality::Primal ? b : a;
  return inner(p.phi_minus, d.phi_plus) + inner(p.phi_plus, d.phi_minus);
}

PointS8 PointS8::from_ray(const LorentzVector& f) {
  const double scale = f.a + f.c;
  const double n2 = f.a * f.a + f.b.norm2() + f.c * f.c;
  if (n2 == 0.0) throw DomainError("S8 point from the zero vector");
  if (std::abs(lorentz_form(f, f)) > 1e-10 * n2)
    throw DomainError("S8 point from a non-null vector");
  // Null with a, c of one sign; a + c vanishes only for f = 0.
  return PointS8((1.0 / scale) * f);
}

PointS8 PointS8::at(const Vector8& c) {
  const double s = 1.0 + c.norm2();
  return PointS8({1.0 / s, (-2.0 / s) * c, c.norm2() / s});
}

PointS8 PointS8::infinity() { return PointS8({0.0, Vector8{}, 1.0}); }

std::optional<Vector8> PointS8::finite_point(double tol) const {
  if (ray_.a <= tol) return std::nullopt;
  return (-0.5 / ray_.a) * ray_.b;
}

double PointS8::distance(const PointS8& other) const {
  return euclidean_norm(ray_ - other.ray_);
}

PointS8 project(const Twistor& psi) {
  if (psi.norm2() == 0.0) throw DomainError("projection of the zero twistor");
  return PointS8::from_ray(q_map(psi));
}

std::optional<Vector8> zero_locus(const Twistor& psi) {
  const Octonion& lo = psi.phi_minus.coords;
  const Octonion& hi = psi.phi_plus.coords;
  const double n2 = lo.norm2();
  if (n2 == 0.0) return std::nullopt;
  if (psi.duality == Duality::Primal) {
    // x lo = -hi  =>  x = -hi conj(lo) / |lo|^2
    return Vector8{(-1.0 / n2) * (hi * lo.conj())};
  }
  // -conj(x) lo = -hi  =>  x = lo conj(hi) / |lo|^2
  return Vector8{(1.0 / n2) * (lo * hi.conj())};
}

}  // namespace octosl
