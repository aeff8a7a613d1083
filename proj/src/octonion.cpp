#include "octosl/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "octosl/error.hpp"

namespace octosl {
namespace {

using Quat = std::array<double, 4>;

Quat qmul(const Quat& p, const Quat& r) {
  return {p[0] * r[0] - p[1] * r[1] - p[2] * r[2] - p[3] * r[3],
          p[0] * r[1] + p[1] * r[0] + p[2] * r[3] - p[3] * r[2],
          p[0] * r[2] - p[1] * r[3] + p[2] * r[0] + p[3] * r[1],
          p[0] * r[3] + p[1] * r[2] - p[2] * r[1] + p[3] * r[0]};
}

Quat qconj(const Quat& p) { return {p[0], -p[1], -p[2], -p[3]}; }

Quat qsub(const Quat& a, const Quat& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Quat qadd(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

}  // namespace

Octonion Octonion::unit(std::size_t i) {
  Octonion x;
  x.c_.at(i) = 1.0;
  return x;
}

Octonion Octonion::im() const {
  Octonion x = *this;
  x.c_[0] = 0.0;
  return x;
}

Octonion Octonion::conj() const {
  Octonion x;
  x.c_[0] = c_[0];
  for (std::size_t i = 1; i < 8; ++i) x.c_[i] = -c_[i];
  return x;
}

double Octonion::norm2() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return s;
}

double Octonion::norm() const { return std::sqrt(norm2()); }

Octonion Octonion::inverse() const {
  const double n2 = norm2();
  if (n2 == 0.0) throw DomainError("inverse of the zero octonion");
  return conj() / n2;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
Octonion operator-(Octonion a) { return a *= -1.0; }
Octonion operator*(Octonion a, double s) { return a *= s; }
Octonion operator*(double s, Octonion a) { return a *= s; }
Octonion operator/(Octonion a, double s) { return a *= 1.0 / s; }

Octonion operator*(const Octonion& x, const Octonion& y) {
  const Quat p{x[0], x[1], x[2], x[3]};
  const Quat q{x[4], x[5], x[6], x[7]};
  const Quat r{y[0], y[1], y[2], y[3]};
  const Quat s{y[4], y[5], y[6], y[7]};
  const Quat lo = qsub(qmul(p, r), qmul(qconj(s), q));
  const Quat hi = qadd(qmul(s, p), qmul(q, qconj(r)));
  return Octonion({lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]});
}

Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }
Octonion oct_conj(const Octonion& x) { return x.conj(); }
Octonion oct_inv(const Octonion& x) { return x.inverse(); }

double inner(const Octonion& x, const Octonion& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return (x * y) * z - x * (y * z);
}

double max_abs(const Octonion& x) {
  double m = 0.0;
  for (double v : x.coords()) m = std::max(m, std::abs(v));
  return m;
}

std::ostream& operator<<(std::ostream& os, const Octonion& x) {
  os << '[';
  for (std::size_t i = 0; i < 8; ++i) os << (i ? ", " : "") << x[i];
  return os << ']';
}

QuaternionSubalgebra QuaternionSubalgebra::generate(const Octonion& u,
                                                    const Octonion& v,
                                                    double tol) {
  if (std::abs(u.norm() - 1.0) > tol || std::abs(v.norm() - 1.0) > tol)
    throw PreconditionError("quaternion_subalgebra: generators must be unit");
  if (std::abs(u.re()) > tol || std::abs(v.re()) > tol)
    throw PreconditionError(
        "quaternion_subalgebra: generators must be imaginary");
  if (std::abs(inner(u, v)) > tol)
    throw PreconditionError(
        "quaternion_subalgebra: generators must be orthogonal");
  return QuaternionSubalgebra({Octonion::real(1.0), u, v, u * v});
}

QuaternionSubalgebra QuaternionSubalgebra::standard() {
  return generate(Octonion::unit(1), Octonion::unit(2));
}

Octonion QuaternionSubalgebra::image(const std::array<double, 4>& q) const {
  Octonion x;
  for (std::size_t i = 0; i < 4; ++i) x += q[i] * basis_[i];
  return x;
}

std::array<double, 4> QuaternionSubalgebra::coordinates(
    const Octonion& x) const {
  return {inner(x, basis_[0]), inner(x, basis_[1]), inner(x, basis_[2]),
          inner(x, basis_[3])};
}

double QuaternionSubalgebra::distance(const Octonion& x) const {
  return (x - image(coordinates(x))).norm();
}

double QuaternionSubalgebra::closure_residual() const {
  double worst = 0.0;
  for (const auto& p : basis_)
    for (const auto& q : basis_) worst = std::max(worst, distance(p * q));
  return worst;
}

QuaternionSubalgebra quaternion_subalgebra(const Octonion& u,
                                           const Octonion& v) {
  return QuaternionSubalgebra::generate(u, v);
}

}  // namespace octosl
