#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "octosl/invariants.hpp"
#include "octosl/octonion.hpp"

namespace octosl {

/// q0 + q1 i + q2 j + q3 k. Deliberately separate from Octonion.
struct Quaternion {
  std::array<double, 4> q{};

  static Quaternion real(double r) { return {{r, 0.0, 0.0, 0.0}}; }
  double re() const { return q[0]; }
  Quaternion conj() const { return {{q[0], -q[1], -q[2], -q[3]}}; }
  double norm2() const { return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]; }
  Quaternion inverse() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x, const Quaternion& y);
Quaternion operator*(double s, const Quaternion& x);
Quaternion operator*(const Quaternion& x, const Quaternion& y);

/// [[a, b], [c, d]]
struct QMat2 {
  Quaternion a, b, c, d;

  static QMat2 identity() {
    return {Quaternion::real(1), {}, {}, Quaternion::real(1)};
  }
  QuaternionEntries entries() const { return {a.q, b.q, c.q, d.q}; }
  static QMat2 from_entries(const QuaternionEntries& e) {
    return {{e[0]}, {e[1]}, {e[2]}, {e[3]}};
  }
  double norm2() const { return a.norm2() + b.norm2() + c.norm2() + d.norm2(); }
};

QMat2 operator*(const QMat2& m, const QMat2& n);

/// Writes q = α + β j, α = q0 + q1 i, β = q2 + q3 i, as the block
/// (α β; -conj(β) conj(α)).
Eigen::Matrix2cd embed_complex(const Quaternion& q);
Eigen::Matrix4cd embed_complex(const QMat2& m);

/// Determinant of embed_complex(m) by partial-pivot LU.
std::complex<double> cdet_complex(const QMat2& m);
double cdet_oracle(const QMat2& m);

/// |a|^2|d|^2 + |b|^2|c|^2 - 2 Re(a conj(c) d conj(b))
double qdet(const QMat2& m);

/// Complex determinant after relabelling the structure i -> j -> k -> i.
double cdet_alternative(const QMat2& m);

/// Largest |Im| among the coefficients of the characteristic polynomial of
/// embed_complex(m).
double charpoly_imaginary_residual(const QMat2& m);

struct MuQdet {
  double mu;
  double det;
};

/// (μ(sl2h_embed(h, m)), qdet(m)); expected μ = -3 qdet.
MuQdet mu_vs_qdet(const QMat2& m, const QuaternionSubalgebra& h);

/// Hessian of log qdet at m in the 16 coordinates (a, b, c, d).
Eigen::Matrix<double, 16, 16> qdet_hessian_log(const QMat2& m);

/// Signature of the log-qdet Hessian on the tangent of qdet = const at m
/// (trace-imaginary matrices at the identity).
Signature qdet_restricted_signature(const QMat2& m);

}  // namespace octosl
