#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

namespace octosl {

/// Real octonion c0 + c1 e1 + ... + c7 e7.
///
/// The product is the Cayley-Dickson doubling of the quaternions
/// H = span(1, e1, e2, e3) with e4 the doubling unit and
/// e5 = e1 e4, e6 = e2 e4, e7 = e3 e4:
///   (p, q)(r, s) = (p r - conj(s) q, s p + q conj(r)).
class Octonion {
 public:
  using Coords = std::array<double, 8>;

  constexpr Octonion() = default;
  constexpr explicit Octonion(const Coords& coords) : c_(coords) {}

  static constexpr Octonion real(double value) {
    Octonion x;
    x.c_[0] = value;
    return x;
  }
  /// Basis element e_i, i in [0, 8); e_0 is the identity.
  static Octonion unit(std::size_t i);

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }
  constexpr const Coords& coords() const { return c_; }

  constexpr double re() const { return c_[0]; }
  Octonion im() const;
  Octonion conj() const;
  double norm2() const;
  double norm() const;
  /// conj(x) / |x|^2. Throws DomainError for zero.
  Octonion inverse() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);

  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Coords c_{};
};

Octonion operator+(Octonion a, const Octonion& b);
Octonion operator-(Octonion a, const Octonion& b);
Octonion operator-(Octonion a);
Octonion operator*(Octonion a, double s);
Octonion operator*(double s, Octonion a);
Octonion operator/(Octonion a, double s);
Octonion operator*(const Octonion& x, const Octonion& y);

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
Octonion oct_inv(const Octonion& x);

/// Euclidean inner product Re(x conj(y)).
double inner(const Octonion& x, const Octonion& y);
/// (x y) z - x (y z)
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);
/// Largest coordinate magnitude.
double max_abs(const Octonion& x);

std::ostream& operator<<(std::ostream& os, const Octonion& x);

/// span(1, u, v, u v) for orthonormal imaginary u, v.
class QuaternionSubalgebra {
 public:
  /// Throws PreconditionError unless u, v are unit, imaginary and
  /// orthogonal to within `tol`.
  static QuaternionSubalgebra generate(const Octonion& u, const Octonion& v,
                                       double tol = 1e-10);
  /// span(1, e1, e2, e3).
  static QuaternionSubalgebra standard();

  /// (1, u, v, u v)
  const std::array<Octonion, 4>& basis() const { return basis_; }
  const Octonion& u() const { return basis_[1]; }
  const Octonion& v() const { return basis_[2]; }

  /// Image of q0 + q1 i + q2 j + q3 k.
  Octonion image(const std::array<double, 4>& q) const;
  /// Coordinates of the orthogonal projection of x onto the span.
  std::array<double, 4> coordinates(const Octonion& x) const;
  /// Distance from x to the span.
  double distance(const Octonion& x) const;
  /// Largest deviation of a basis product from the span, over all 16.
  double closure_residual() const;

 private:
  explicit QuaternionSubalgebra(const std::array<Octonion, 4>& basis)
      : basis_(basis) {}
  std::array<Octonion, 4> basis_;
};

QuaternionSubalgebra quaternion_subalgebra(const Octonion& u,
                                           const Octonion& v);

}  // namespace octosl
