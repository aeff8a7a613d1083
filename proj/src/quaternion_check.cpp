#include "octosl/quaternion_check.hpp"

#include <cmath>

#include "octosl/error.hpp"

namespace octosl {
namespace {

using Vec16 = Eigen::Matrix<double, 16, 1>;

QMat2 from_vec(const Vec16& v) {
  QMat2 m;
  Quaternion* slots[4] = {&m.a, &m.b, &m.c, &m.d};
  for (int s = 0; s < 4; ++s)
    for (int i = 0; i < 4; ++i) slots[s]->q[static_cast<size_t>(i)] = v[4 * s + i];
  return m;
}

Vec16 to_vec(const QMat2& m) {
  Vec16 v;
  const Quaternion* slots[4] = {&m.a, &m.b, &m.c, &m.d};
  for (int s = 0; s < 4; ++s)
    for (int i = 0; i < 4; ++i) v[4 * s + i] = slots[s]->q[static_cast<size_t>(i)];
  return v;
}

double qdet_vec(const Vec16& v) { return qdet(from_vec(v)); }

double polarize(const Vec16& r1, const Vec16& r2, const Vec16& r3,
                const Vec16& r4) {
  double sum = 0.0;
  for (int s2 = -1; s2 <= 1; s2 += 2)
    for (int s3 = -1; s3 <= 1; s3 += 2)
      for (int s4 = -1; s4 <= 1; s4 += 2)
        sum += s2 * s3 * s4 * qdet_vec(r1 + s2 * r2 + s3 * r3 + s4 * r4);
  return sum / 192.0;
}

Quaternion rotate_structure(const Quaternion& x) {
  // i -> j, j -> k, k -> i
  return {{x.q[0], x.q[3], x.q[1], x.q[2]}};
}

}  // namespace

Quaternion Quaternion::inverse() const {
  const double n = norm2();
  if (n == 0.0) throw DomainError("inverse of the zero quaternion");
  return (1.0 / n) * conj();
}

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {{x.q[0] + y.q[0], x.q[1] + y.q[1], x.q[2] + y.q[2], x.q[3] + y.q[3]}};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return {{x.q[0] - y.q[0], x.q[1] - y.q[1], x.q[2] - y.q[2], x.q[3] - y.q[3]}};
}

Quaternion operator*(double s, const Quaternion& x) {
  return {{s * x.q[0], s * x.q[1], s * x.q[2], s * x.q[3]}};
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const auto& a = x.q;
  const auto& b = y.q;
  return {{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
           a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
           a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
           a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]}};
}

QMat2 operator*(const QMat2& m, const QMat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Eigen::Matrix2cd embed_complex(const Quaternion& x) {
  const std::complex<double> alpha(x.q[0], x.q[1]);
  const std::complex<double> beta(x.q[2], x.q[3]);
  Eigen::Matrix2cd b;
  b << alpha, beta, -std::conj(beta), std::conj(alpha);
  return b;
}

Eigen::Matrix4cd embed_complex(const QMat2& m) {
  Eigen::Matrix4cd out;
  out.block<2, 2>(0, 0) = embed_complex(m.a);
  out.block<2, 2>(0, 2) = embed_complex(m.b);
  out.block<2, 2>(2, 0) = embed_complex(m.c);
  out.block<2, 2>(2, 2) = embed_complex(m.d);
  return out;
}

std::complex<double> cdet_complex(const QMat2& m) {
  return embed_complex(m).partialPivLu().determinant();
}

double cdet_oracle(const QMat2& m) { return cdet_complex(m).real(); }

double qdet(const QMat2& m) {
  const Quaternion cross = m.a * m.c.conj() * m.d * m.b.conj();
  return m.a.norm2() * m.d.norm2() + m.b.norm2() * m.c.norm2() -
         2.0 * cross.re();
}

double cdet_alternative(const QMat2& m) {
  return cdet_oracle({rotate_structure(m.a), rotate_structure(m.b),
                      rotate_structure(m.c), rotate_structure(m.d)});
}

double charpoly_imaginary_residual(const QMat2& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(embed_complex(m), false);
  // coefficients of prod (x - λ), highest degree first
  std::array<std::complex<double>, 5> coef{1.0, 0.0, 0.0, 0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    const std::complex<double> lambda = es.eigenvalues()[k];
    for (int i = k + 1; i >= 1; --i) coef[static_cast<size_t>(i)] -= lambda * coef[static_cast<size_t>(i - 1)];
  }
  double worst = 0.0;
  for (const auto& c : coef) worst = std::max(worst, std::abs(c.imag()));
  return worst;
}

MuQdet mu_vs_qdet(const QMat2& m, const QuaternionSubalgebra& h) {
  return {mu(sl2h_embed(h, m.entries())), qdet(m)};
}

Eigen::Matrix<double, 16, 16> qdet_hessian_log(const QMat2& m) {
  const Vec16 r = to_vec(m);
  const double det = qdet(m);
  if (det == 0.0) throw SingularError("log qdet at a singular matrix");
  Vec16 g;
  Eigen::Matrix<double, 16, 16> h;
  for (int i = 0; i < 16; ++i) {
    const Vec16 ei = Vec16::Unit(i);
    g[i] = 4.0 * polarize(r, r, r, ei);
    for (int j = i; j < 16; ++j)
      h(i, j) = h(j, i) = 12.0 * polarize(r, r, ei, Vec16::Unit(j));
  }
  return h / det - (g * g.transpose()) / (det * det);
}

Signature qdet_restricted_signature(const QMat2& m) {
  const Vec16 r = to_vec(m);
  Vec16 g;
  for (int i = 0; i < 16; ++i) g[i] = polarize(r, r, r, Vec16::Unit(i));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(g.transpose()),
                                        Eigen::ComputeFullV);
  const Eigen::MatrixXd basis = svd.matrixV().rightCols(15);
  return signature_of(basis.transpose() * qdet_hessian_log(m) * basis);
}

}  // namespace octosl
