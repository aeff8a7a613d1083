#pragma once

#include <optional>

#include "octosl/lorentz.hpp"
#include "octosl/triality.hpp"

namespace octosl {

enum class Duality { Primal, Dual };

constexpr Duality flip(Duality d) {
  return d == Duality::Primal ? Duality::Dual : Duality::Primal;
}

/// The twistor field psi(x) = x . phi_minus + phi_plus.
///
/// For PRIMAL twistors (the space T) phi_minus lies in S- and phi_plus in
/// S+; for DUAL twistors (T*) the chiralities are swapped.
struct Twistor {
  Duality duality = Duality::Primal;
  Spinor phi_minus{Chirality::Minus, {}};
  Spinor phi_plus{Chirality::Plus, {}};

  Twistor() = default;
  /// Throws PreconditionError if the chirality tags disagree with `d`.
  Twistor(Duality d, const Spinor& lo, const Spinor& hi);

  static Twistor primal(const Octonion& lo, const Octonion& hi);
  static Twistor dual(const Octonion& lo, const Octonion& hi);
  static Twistor zero(Duality d = Duality::Primal);

  static constexpr Chirality lo_chirality(Duality d) {
    return d == Duality::Primal ? Chirality::Minus : Chirality::Plus;
  }

  double norm2() const { return phi_minus.norm2() + phi_plus.norm2(); }
  friend bool operator==(const Twistor&, const Twistor&) = default;
};

// Linear structure; mixing dualities throws PreconditionError.
Twistor operator+(const Twistor& a, const Twistor& b);
Twistor operator-(const Twistor& a, const Twistor& b);
Twistor operator*(double s, const Twistor& a);
double max_abs_difference(const Twistor& a, const Twistor& b);

/// psi(x) = x . phi- + phi+
Spinor evaluate(const Twistor& psi, const Vector8& x);

/// Conformal generator actions (conformal weight -1/2):
///   Translation t: (phi-, t.phi- + phi+)
///   Reflection n:  (-n.phi-, n.phi+)          flips duality
///   Inversion:     (phi+, -phi-)              flips duality
///   Dilation l:    (l^{1/2} phi-, l^{-1/2} phi+)
Twistor act(const ConformalGenerator& g, const Twistor& psi);
Twistor act(const ConformalWord& w, const Twistor& psi);

/// <(phi-, phi+), (chi, omega)> = <phi-, omega> + <phi+, chi>, pairing a
/// primal twistor with a dual one (either argument order).
double dual_pairing(const Twistor& a, const Twistor& b);

/// A point of S^8, stored as a null ray of R^{9,1} normalized to a + c = 1.
class PointS8 {
 public:
  /// Throws DomainError for the zero vector or a non-null vector
  /// (|L(f,f)| > 1e-10 |f|^2).
  static PointS8 from_ray(const LorentzVector& f);
  static PointS8 at(const Vector8& c);
  static PointS8 infinity();

  const LorentzVector& ray() const { return ray_; }
  /// nullopt at infinity (a <= tol).
  std::optional<Vector8> finite_point(double tol = 1e-14) const;
  /// Euclidean distance between normalized rays.
  double distance(const PointS8& other) const;

 private:
  explicit PointS8(const LorentzVector& f) : ray_(f) {}
  LorentzVector ray_;
};

/// The point where psi vanishes, via the null vector Q(psi).
/// Throws DomainError for the zero twistor.
PointS8 project(const Twistor& psi);

/// Zero of psi by octonion division (x . phi- = -phi+); nullopt when
/// phi- = 0, i.e. the zero is at infinity.
std::optional<Vector8> zero_locus(const Twistor& psi);

}  // namespace octosl
