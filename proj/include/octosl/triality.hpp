#pragma once

#include "octosl/octonion.hpp"

namespace octosl {

enum class Chirality { Plus, Minus };

constexpr Chirality opposite(Chirality c) {
  return c == Chirality::Plus ? Chirality::Minus : Chirality::Plus;
}

/// Element of R^8, identified with an octonion.
struct Vector8 {
  Octonion coords;

  double norm2() const { return coords.norm2(); }
  friend bool operator==(const Vector8&, const Vector8&) = default;
};

Vector8 operator+(const Vector8& a, const Vector8& b);
Vector8 operator-(const Vector8& a, const Vector8& b);
Vector8 operator*(double s, const Vector8& a);
double inner(const Vector8& a, const Vector8& b);

/// Element of S+ or S-, identified with an octonion.
struct Spinor {
  Chirality chirality = Chirality::Plus;
  Octonion coords;

  static Spinor plus(const Octonion& x) { return {Chirality::Plus, x}; }
  static Spinor minus(const Octonion& x) { return {Chirality::Minus, x}; }
  static Spinor zero(Chirality c) { return {c, Octonion()}; }

  double norm2() const { return coords.norm2(); }
  friend bool operator==(const Spinor&, const Spinor&) = default;
};

// Sums and inner products require matching chirality and throw
// PreconditionError otherwise.
Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a);
Spinor operator*(double s, const Spinor& a);
double inner(const Spinor& a, const Spinor& b);

/// x . phi : R^8 x S+ -> S-, realized as -conj(x) phi.
Spinor cliff_v_on_plus(const Vector8& x, const Spinor& phi);
/// x . psi : R^8 x S- -> S+, realized as x psi.
Spinor cliff_v_on_minus(const Vector8& x, const Spinor& psi);
/// Clifford multiplication on either chirality.
Spinor clifford(const Vector8& x, const Spinor& phi);

/// phi . psi : S+ x S- -> R^8, the vector with
///   <x, phi . psi> = <phi, x . psi> = -<x . phi, psi>   for all x.
/// In octonions this is phi conj(psi).
Vector8 pair_spinors(const Spinor& phi, const Spinor& psi);

/// The vector beta with <x . u, w> = <x, beta> for all x, where u and w
/// have opposite chirality.
Vector8 clifford_adjoint(const Spinor& u, const Spinor& w);

}  // namespace octosl
