#include "octosl/invariants.hpp"

#include <cmath>

#include "octosl/error.hpp"

namespace octosl {
namespace {

void put(Vec32& v, int block, const Octonion& x) {
  for (int i = 0; i < 8; ++i) v[8 * block + i] = x[static_cast<size_t>(i)];
}

Octonion take(const Vec32& v, int block) {
  Octonion x;
  for (int i = 0; i < 8; ++i) x[static_cast<size_t>(i)] = v[8 * block + i];
  return x;
}

Vec32 dual_coordinates(const std::array<Twistor, 2>& pair) {
  Vec32 v;
  put(v, 0, pair[0].phi_minus.coords);
  put(v, 1, pair[0].phi_plus.coords);
  put(v, 2, pair[1].phi_minus.coords);
  put(v, 3, pair[1].phi_plus.coords);
  return v;
}

double det_of(const Vec32& v) { return det_rho(Rho::from_vector(v)); }

double polarize(const Vec32& r1, const Vec32& r2, const Vec32& r3,
                const Vec32& r4) {
  // det(-x) = det(x), so fixing the sign of r1 halves the 16-term sum.
  double sum = 0.0;
  for (int s2 = -1; s2 <= 1; s2 += 2)
    for (int s3 = -1; s3 <= 1; s3 += 2)
      for (int s4 = -1; s4 <= 1; s4 += 2)
        sum += s2 * s3 * s4 * det_of(r1 + s2 * r2 + s3 * r3 + s4 * r4);
  return sum / 192.0;  // 2 * sum / (4! * 2^4)
}

// Columns of V spanning directions with singular value <= rel * max.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& a, double rel) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > rel * top) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

std::array<double, 2> duality_weights(const LorentzVector& v) {
  const double l = lorentz_form(v, v);
  const double n2 = v.a * v.a + v.b.norm2() + v.c * v.c;
  if (n2 == 0.0 || std::abs(l) <= 1e-14 * n2)
    throw PreconditionError("duality: v must be non-null");
  return l < 0.0 ? std::array<double, 2>{1.0, 1.0}
                 : std::array<double, 2>{1.0, -1.0};
}

}  // namespace

Rho::Rho(const Twistor& first, const Twistor& second)
    : psi1(first), psi2(second) {
  if (first.duality != Duality::Primal || second.duality != Duality::Primal)
    throw PreconditionError("rho: both twistors must be primal");
}

Rho Rho::from_matrix(const Octonion& a, const Octonion& b, const Octonion& c,
                     const Octonion& d) {
  return {Twistor::primal(a, b), Twistor::primal(c, d)};
}

Rho Rho::reference() {
  return from_matrix(Octonion::real(1.0), {}, {}, Octonion::real(1.0));
}

Rho Rho::from_vector(const Vec32& v) {
  return from_matrix(take(v, 0), take(v, 1), take(v, 2), take(v, 3));
}

std::array<Octonion, 4> Rho::matrix() const {
  return {psi1.phi_minus.coords, psi1.phi_plus.coords, psi2.phi_minus.coords,
          psi2.phi_plus.coords};
}

Vec32 Rho::to_vector() const {
  Vec32 v;
  const auto m = matrix();
  for (int k = 0; k < 4; ++k) put(v, k, m[static_cast<size_t>(k)]);
  return v;
}

Rho operator+(const Rho& x, const Rho& y) {
  return {x.psi1 + y.psi1, x.psi2 + y.psi2};
}
Rho operator-(const Rho& x, const Rho& y) {
  return {x.psi1 - y.psi1, x.psi2 - y.psi2};
}
Rho operator*(double s, const Rho& x) { return {s * x.psi1, s * x.psi2}; }

Rho right_multiply(const Rho& rho, const Eigen::Matrix2d& p) {
  return {p(0, 0) * rho.psi1 + p(1, 0) * rho.psi2,
          p(0, 1) * rho.psi1 + p(1, 1) * rho.psi2};
}

Rho apply(const ConformalWord& w, const Rho& rho) {
  if (w.parity() != 0)
    throw PreconditionError("apply: word must have even parity");
  return {act(w, rho.psi1), act(w, rho.psi2)};
}

OctMatrix2 OctMatrix2::from_vector(const Vec32& v) {
  return {take(v, 0), take(v, 1), take(v, 2), take(v, 3)};
}

Vec32 OctMatrix2::to_vector() const {
  Vec32 v;
  put(v, 0, a);
  put(v, 1, b);
  put(v, 2, c);
  put(v, 3, d);
  return v;
}

bool OctMatrix2::trace_imaginary(double tol) const {
  return std::abs(a.re() + d.re()) <= tol;
}

bool OctMatrix2::skew_type(double tol) const {
  return std::abs(a.re()) <= tol && std::abs(d.re()) <= tol &&
         max_abs(b + c.conj()) <= tol;
}

bool OctMatrix2::indefinite_skew_type(double tol) const {
  return std::abs(a.re()) <= tol && std::abs(d.re()) <= tol &&
         max_abs(b - c.conj()) <= tol;
}

LorentzVector f_ab(const Twistor& psi_a, const Twistor& psi_b) {
  if (psi_a.duality != psi_b.duality)
    throw PreconditionError("f_ab: duality mismatch");
  return {inner(psi_a.phi_minus, psi_b.phi_minus),
          clifford_adjoint(psi_a.phi_minus, psi_b.phi_plus) +
              clifford_adjoint(psi_b.phi_minus, psi_a.phi_plus),
          inner(psi_a.phi_plus, psi_b.phi_plus)};
}

LorentzVector q_map(const Twistor& psi) { return f_ab(psi, psi); }

LorentzVector p_map(const Twistor& psi1, const Twistor& psi2) {
  return f_ab(psi1, psi2);
}

LorentzVector p_map_by_pairing(const Twistor& psi1, const Twistor& psi2) {
  std::array<LorentzVector, 10> basis;
  basis[0] = {1.0, {}, 0.0};
  basis[1] = {0.0, {}, 1.0};
  for (std::size_t k = 0; k < 8; ++k)
    basis[k + 2] = {0.0, Vector8{Octonion::unit(k)}, 0.0};

  Eigen::Matrix<double, 10, 10> gram;
  Eigen::Matrix<double, 10, 1> rhs;
  for (int i = 0; i < 10; ++i) {
    const auto& vi = basis[static_cast<size_t>(i)];
    rhs[i] = dual_pairing(clifford_action(vi, psi1), psi2);
    for (int j = 0; j < 10; ++j)
      gram(i, j) = lorentz_form(vi, basis[static_cast<size_t>(j)]);
  }
  const Eigen::Matrix<double, 10, 1> x = gram.partialPivLu().solve(rhs);
  LorentzVector p;
  for (int j = 0; j < 10; ++j) p = p + x[j] * basis[static_cast<size_t>(j)];
  return p;
}

double mu(const Rho& rho) {
  const LorentzVector f11 = f_ab(rho.psi1, rho.psi1);
  const LorentzVector f22 = f_ab(rho.psi2, rho.psi2);
  const LorentzVector f12 = f_ab(rho.psi1, rho.psi2);
  return lorentz_form(f11, f22) - lorentz_form(f12, f12);
}

double mu_null(const Rho& rho) {
  return lorentz_form(q_map(rho.psi1), q_map(rho.psi2));
}

double det_rho(const Rho& rho) {
  return -0.5 * lorentz_form(f_ab(rho.psi1, rho.psi1),
                             f_ab(rho.psi2, rho.psi2));
}

double det_closed_form(const Rho& rho) {
  const auto& p1m = rho.psi1.phi_minus;
  const auto& p1p = rho.psi1.phi_plus;
  const auto& p2m = rho.psi2.phi_minus;
  const auto& p2p = rho.psi2.phi_plus;
  return p1m.norm2() * p2p.norm2() + p2m.norm2() * p1p.norm2() -
         2.0 * inner(pair_spinors(p1p, p1m), pair_spinors(p2p, p2m));
}

double quartic_polarization(const Rho& r1, const Rho& r2, const Rho& r3,
                            const Rho& r4) {
  return polarize(r1.to_vector(), r2.to_vector(), r3.to_vector(),
                  r4.to_vector());
}

Vec32 grad_det(const Rho& rho) {
  const Vec32 r = rho.to_vector();
  const double s = std::max(r.norm(), 1e-300);
  Vec32 g;
  for (int i = 0; i < 32; ++i) {
    const Vec32 e = s * Vec32::Unit(i);
    g[i] = 4.0 * polarize(r, r, r, e) / s;
  }
  return g;
}

std::array<Twistor, 2> dual_gradient(const Rho& rho) {
  const Vec32 g = grad_det(rho);
  return {Twistor::dual(take(g, 1), take(g, 0)),
          Twistor::dual(take(g, 3), take(g, 2))};
}

SymBilinear32 hessian_det(const Rho& rho) {
  const Vec32 r = rho.to_vector();
  const double s = std::max(r.norm(), 1e-300);
  SymBilinear32 h;
  for (int i = 0; i < 32; ++i) {
    const Vec32 ei = s * Vec32::Unit(i);
    for (int j = i; j < 32; ++j) {
      const Vec32 ej = s * Vec32::Unit(j);
      h(i, j) = h(j, i) = 12.0 * polarize(r, r, ei, ej) / (s * s);
    }
  }
  return h;
}

double require_regular(const Rho& rho, double floor) {
  const double det = det_rho(rho);
  const double n2 = rho.norm2();
  if (!(std::abs(det) >= floor * n2 * n2) || n2 == 0.0)
    throw SingularError("det rho is below the near-singular floor");
  return det;
}

SymBilinear32 hessian_log_det(const Rho& rho, double floor) {
  const double det = require_regular(rho, floor);
  const Vec32 g = grad_det(rho);
  return hessian_det(rho) / det - (g * g.transpose()) / (det * det);
}

LorentzVector su2_vector() { return {1.0, {}, 1.0}; }
LorentzVector su11_vector() { return {-1.0, {}, 1.0}; }

std::array<Twistor, 2> duality_image(const Rho& rho, const LorentzVector& v) {
  const auto h = duality_weights(v);
  return {h[0] * clifford_action(v, rho.psi1),
          h[1] * clifford_action(v, rho.psi2)};
}

Vec32 duality_defect(const Rho& rho, const LorentzVector& v) {
  return dual_coordinates(dual_gradient(rho)) -
         kDualityCalibration * dual_coordinates(duality_image(rho, v));
}

double duality_residual(const Rho& rho, const LorentzVector& v,
                        double floor) {
  duality_weights(v);
  require_regular(rho, floor);
  return duality_defect(rho, v).norm();
}

Mat32 duality_jacobian(const Rho& rho, const LorentzVector& v) {
  const Mat32 hess = hessian_det(rho);
  Mat32 jac;
  // ρ̂ swaps the two spinor slots of each column of the gradient.
  constexpr int kSwap[4] = {1, 0, 3, 2};
  for (int blk = 0; blk < 4; ++blk)
    jac.middleRows(8 * blk, 8) = hess.middleRows(8 * kSwap[blk], 8);
  for (int i = 0; i < 32; ++i) {
    const Rho e = Rho::from_vector(Vec32::Unit(i));
    jac.col(i) -=
        kDualityCalibration * dual_coordinates(duality_image(e, v));
  }
  return jac;
}

Eigen::MatrixXd tangent_basis(const Rho& rho, Subspace s,
                              const std::optional<QuaternionSubalgebra>& h) {
  const Vec32 g = grad_det(rho);
  if (g.norm() == 0.0) throw SingularError("tangent_basis: grad det is zero");
  const Eigen::RowVectorXd gt = g.transpose() / g.norm();
  Eigen::MatrixXd basis;
  switch (s) {
    case Subspace::SL2O:
      basis = kernel_basis(gt, 1e-12);
      break;
    case Subspace::SU2O:
    case Subspace::SU11O: {
      const LorentzVector v = s == Subspace::SU2O ? su2_vector() : su11_vector();
      Eigen::MatrixXd stacked(33, 32);
      stacked.topRows(32) = duality_jacobian(rho, v);
      stacked.row(32) = gt * stacked.topRows(32).norm() / std::sqrt(32.0);
      basis = kernel_basis(stacked, 1e-8);
      break;
    }
    case Subspace::SL2H: {
      if (!h) throw PreconditionError("tangent_basis: SL2H needs a subalgebra");
      sl2h_coordinates(*h, rho);
      Eigen::MatrixXd span = Eigen::MatrixXd::Zero(32, 16);
      for (int slot = 0; slot < 4; ++slot)
        for (int k = 0; k < 4; ++k) {
          const Octonion& e = h->basis()[static_cast<size_t>(k)];
          for (int i = 0; i < 8; ++i)
            span(8 * slot + i, 4 * slot + k) = e[static_cast<size_t>(i)];
        }
      basis = span * kernel_basis(gt * span, 1e-12);
      break;
    }
  }
  if (basis.cols() == 0)
    throw PreconditionError("tangent_basis: empty subspace at this point");
  return basis;
}

Signature signature_of(const Eigen::MatrixXd& sym, double rel) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (sym + sym.transpose()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  Signature sig;
  const double top = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    const double l = ev[i];
    sig.eigenvalues.push_back(l);
    if (std::abs(l) <= rel * top)
      ++sig.zero;
    else if (l > 0.0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

Signature restricted_signature(const Rho& rho, Subspace s,
                               const std::optional<QuaternionSubalgebra>& h,
                               double floor) {
  const Mat32 hess = hessian_log_det(rho, floor);
  const Eigen::MatrixXd basis = tangent_basis(rho, s, h);
  return signature_of(basis.transpose() * hess * basis);
}

NormalForm normalize(const Rho& rho, double floor) {
  require_regular(rho, floor);
  ConformalWord word;
  const auto z1 = zero_locus(rho.psi1);
  const auto z2 = zero_locus(rho.psi2);
  if (z2) {
    // psi2's zero to the origin, then to infinity.
    word.push_back(Translation{*z2});
    word.push_back(Inversion{});
    const auto moved = zero_locus(act(word, rho.psi1));
    if (!moved) throw SingularError("normalize: zeros coincide");
    word.push_back(Translation{*moved});
    // Restores even parity; fixes 0 and infinity.
    word.push_back(Reflection(Vector8{Octonion::unit(1)}));
  } else {
    if (!z1) throw SingularError("normalize: both zeros at infinity");
    word.push_back(Translation{*z1});
  }
  const Rho moved = apply(word, rho);
  const double n1 = moved.psi1.phi_minus.coords.norm();
  const double n2 = moved.psi2.phi_plus.coords.norm();
  if (n1 == 0.0 || n2 == 0.0) throw SingularError("normalize: degenerate");
  Eigen::Matrix2d p = Eigen::Matrix2d::Zero();
  p(0, 0) = 1.0 / n1;
  p(1, 1) = 1.0 / n2;
  return {word, p, right_multiply(moved, p)};
}

Rho retract(const Rho& rho, double floor) {
  const double det = require_regular(rho, floor);
  if (!(det > 0.0)) throw SingularError("retract: det must be positive");
  ConformalWord word;
  const auto z1 = zero_locus(rho.psi1);
  const auto z2 = zero_locus(rho.psi2);
  if (z1 && z2) {
    const Vector8 mid = 0.5 * (*z1 + *z2);
    const double half = (0.5 * (*z1 - *z2)).coords.norm();
    word.push_back(Translation{mid});
    // Zeros at ±h move to ±h/|h|, antipodal for g/(1+r^2)^2.
    word.push_back(Dilation(half));
  } else if (z1 || z2) {
    word.push_back(Translation{z1 ? *z1 : *z2});
  } else {
    throw SingularError("retract: both zeros at infinity");
  }
  const Rho moved = apply(word, rho);
  Eigen::Matrix2d p = Eigen::Matrix2d::Zero();
  p(0, 0) = 1.0 / std::sqrt(moved.psi1.norm2());
  p(1, 1) = 1.0 / std::sqrt(moved.psi2.norm2());
  return right_multiply(moved, p);
}

Rho sl2h_embed(const QuaternionSubalgebra& h, const QuaternionEntries& m) {
  return Rho::from_matrix(h.image(m[0]).conj(), h.image(m[1]).conj(),
                          h.image(m[2]).conj(), h.image(m[3]).conj());
}

QuaternionEntries sl2h_coordinates(const QuaternionSubalgebra& h,
                                   const Rho& rho, double tol) {
  QuaternionEntries out;
  const auto m = rho.matrix();
  const double scale = std::max(1.0, std::sqrt(rho.norm2()));
  for (std::size_t k = 0; k < 4; ++k) {
    const Octonion x = m[k].conj();
    if (h.distance(x) > tol * scale)
      throw PreconditionError("entry lies outside the quaternion subalgebra");
    out[k] = h.coordinates(x);
  }
  return out;
}

}  // namespace octosl
