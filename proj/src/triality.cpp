#include "octosl/triality.hpp"

#include "octosl/error.hpp"

namespace octosl {
namespace {

void require_same(const Spinor& a, const Spinor& b, const char* what) {
  if (a.chirality != b.chirality)
    throw PreconditionError(std::string(what) + ": chirality mismatch");
}

}  // namespace

Vector8 operator+(const Vector8& a, const Vector8& b) {
  return {a.coords + b.coords};
}
Vector8 operator-(const Vector8& a, const Vector8& b) {
  return {a.coords - b.coords};
}
Vector8 operator*(double s, const Vector8& a) { return {s * a.coords}; }
double inner(const Vector8& a, const Vector8& b) {
  return inner(a.coords, b.coords);
}

Spinor operator+(const Spinor& a, const Spinor& b) {
  require_same(a, b, "spinor sum");
  return {a.chirality, a.coords + b.coords};
}
Spinor operator-(const Spinor& a, const Spinor& b) {
  require_same(a, b, "spinor difference");
  return {a.chirality, a.coords - b.coords};
}
Spinor operator-(const Spinor& a) { return {a.chirality, -a.coords}; }
Spinor operator*(double s, const Spinor& a) {
  return {a.chirality, s * a.coords};
}
double inner(const Spinor& a, const Spinor& b) {
  require_same(a, b, "spinor inner product");
  return inner(a.coords, b.coords);
}

Spinor cliff_v_on_plus(const Vector8& x, const Spinor& phi) {
  if (phi.chirality != Chirality::Plus)
    throw PreconditionError("cliff_v_on_plus: expected a spinor in S+");
  return Spinor::minus(-(x.coords.conj() * phi.coords));
}

Spinor cliff_v_on_minus(const Vector8& x, const Spinor& psi) {
  if (psi.chirality != Chirality::Minus)
    throw PreconditionError("cliff_v_on_minus: expected a spinor in S-");
  return Spinor::plus(x.coords * psi.coords);
}

Spinor clifford(const Vector8& x, const Spinor& phi) {
  return phi.chirality == Chirality::Plus ? cliff_v_on_plus(x, phi)
                                          : cliff_v_on_minus(x, phi);
}

Vector8 pair_spinors(const Spinor& phi, const Spinor& psi) {
  if (phi.chirality != Chirality::Plus || psi.chirality != Chirality::Minus)
    throw PreconditionError("pair_spinors: expected (S+, S-)");
  return {phi.coords * psi.coords.conj()};
}

Vector8 clifford_adjoint(const Spinor& u, const Spinor& w) {
  if (u.chirality == w.chirality)
    throw PreconditionError("clifford_adjoint: chiralities must differ");
  // u in S-: <x u, w> = <x, w conj(u)> = <x, w . u>.
  // u in S+: <x . u, w> = -<u, x . w> = -<x, u . w>.
  if (u.chirality == Chirality::Minus) return pair_spinors(w, u);
  return -1.0 * pair_spinors(u, w);
}

}  // namespace octosl
