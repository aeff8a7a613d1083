#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "octosl/lorentz.hpp"
#include "octosl/octonion.hpp"
#include "octosl/twistor.hpp"

namespace octosl {

using Vec32 = Eigen::Matrix<double, 32, 1>;
using Mat32 = Eigen::Matrix<double, 32, 32>;
using SymBilinear32 = Mat32;

/// Operations needing det ρ != 0 reject |det ρ| < floor * |ρ|^4.
inline constexpr double kDefaultSingularFloor = 1e-9;

/// Scalar κ in ρ̂ = κ (v ⊗ h) ρ, fixed so that ρ0 solves the equation for
/// v = (1, 0, 1).
inline constexpr double kDualityCalibration = -1.0;

/// A pair of primal twistors, i.e. the 2x2 array
///   [[phi1-, phi1+], [phi2-, phi2+]].
/// Flattened coordinates (32 reals) are ordered phi1-, phi1+, phi2-, phi2+.
struct Rho {
  Twistor psi1;
  Twistor psi2;

  Rho() = default;
  /// Throws PreconditionError unless both twistors are primal.
  Rho(const Twistor& first, const Twistor& second);

  /// Entries in row-major order (phi1-, phi1+, phi2-, phi2+).
  static Rho from_matrix(const Octonion& a, const Octonion& b,
                         const Octonion& c, const Octonion& d);
  /// ρ0: phi1- = 1, phi2+ = 1, off-diagonal entries zero.
  static Rho reference();
  static Rho from_vector(const Vec32& v);

  std::array<Octonion, 4> matrix() const;
  Vec32 to_vector() const;
  double norm2() const { return psi1.norm2() + psi2.norm2(); }
};

Rho operator+(const Rho& x, const Rho& y);
Rho operator-(const Rho& x, const Rho& y);
Rho operator*(double s, const Rho& x);

/// Right action of GL(2,R): column b of ρP is sum_a psi_a P(a, b).
Rho right_multiply(const Rho& rho, const Eigen::Matrix2d& p);
/// Applies the word to both twistors; the word must have even parity.
Rho apply(const ConformalWord& w, const Rho& rho);

/// Tangent vector at ρ0 written as an octonionic matrix [[a, b], [c, d]]
/// with (a, b, c, d) = (dphi1-, dphi1+, dphi2-, dphi2+).
struct OctMatrix2 {
  Octonion a, b, c, d;

  static OctMatrix2 from_vector(const Vec32& v);
  Vec32 to_vector() const;

  /// Re a + Re d = 0: tangent to det = 1 at ρ0.
  bool trace_imaginary(double tol = 1e-12) const;
  /// Re a = Re d = 0 and b = -conj(c): tangent to SU(2,O) at ρ0.
  bool skew_type(double tol = 1e-12) const;
  /// Re a = Re d = 0 and b = conj(c): tangent to SU(1,1,O) at ρ0.
  bool indefinite_skew_type(double tol = 1e-12) const;
};

/// f_ab(x) = <psi_a(x), psi_b(x)> as a quadratic solution. Both twistors
/// must share a duality flag.
LorentzVector f_ab(const Twistor& psi_a, const Twistor& psi_b);
/// Q(psi) = P(psi, psi), a null vector.
LorentzVector q_map(const Twistor& psi);
/// Symmetric bilinear P with L(P(psi1, psi2), v) = <v . psi1, psi2>.
LorentzVector p_map(const Twistor& psi1, const Twistor& psi2);
/// Same map, obtained by solving the ten equations L(P, v_i) =
/// <v_i . psi1, psi2> over a basis of R^{9,1}.
LorentzVector p_map_by_pairing(const Twistor& psi1, const Twistor& psi2);

/// L(f11, f22) - L(f12, f21) = -3 det ρ.
double mu(const Rho& rho);
/// L(Q(psi1), Q(psi2)) = L(f11, f22) = -2 det ρ.
double mu_null(const Rho& rho);
/// det ρ = -L(f11, f22) / 2.
double det_rho(const Rho& rho);
/// |phi1-|^2 |phi2+|^2 + |phi2-|^2 |phi1+|^2
///   - 2 <phi1- . phi1+, phi2- . phi2+>
double det_closed_form(const Rho& rho);

/// Symmetric 4-linear form M with M(ρ, ρ, ρ, ρ) = det ρ, from the signed
/// sum of det over the 2^4 combinations ±ρ1 ± ρ2 ± ρ3 ± ρ4.
double quartic_polarization(const Rho& r1, const Rho& r2, const Rho& r3,
                            const Rho& r4);

/// Euclidean gradient: grad_det(ρ) . ρ' = 4 M(ρ, ρ, ρ, ρ').
Vec32 grad_det(const Rho& rho);

/// ρ̂ in T* ⊗ R^2*, written as two dual twistors so that
/// d det(ρ') = <hat[0], psi1'> + <hat[1], psi2'>.
std::array<Twistor, 2> dual_gradient(const Rho& rho);

/// Hessian of det: 12 M(ρ, ρ, A, B).
SymBilinear32 hessian_det(const Rho& rho);

/// Hessian of log det:
///   12 M(ρ,ρ,A,B)/det - 16 M(ρ,ρ,ρ,A) M(ρ,ρ,ρ,B)/det^2.
/// Throws SingularError below the floor.
SymBilinear32 hessian_log_det(const Rho& rho,
                              double floor = kDefaultSingularFloor);

/// Throws SingularError if |det ρ| < floor * |ρ|^4; returns det ρ.
double require_regular(const Rho& rho, double floor = kDefaultSingularFloor);

enum class Subspace { SL2O, SU2O, SU11O, SL2H };

/// Reference vectors for the duality loci.
LorentzVector su2_vector();   // (1, 0, 1)
LorentzVector su11_vector();  // (-1, 0, 1)

/// (v ⊗ h) ρ in dual coordinates, with h = I for L(v,v) < 0 and
/// h = diag(1, -1) for L(v,v) > 0. Throws PreconditionError for null v.
std::array<Twistor, 2> duality_image(const Rho& rho, const LorentzVector& v);

/// ρ̂ - κ (v ⊗ h) ρ as 32 dual coordinates.
Vec32 duality_defect(const Rho& rho, const LorentzVector& v);
/// |ρ̂ - κ (v ⊗ h) ρ|; zero characterizes membership.
double duality_residual(const Rho& rho, const LorentzVector& v,
                        double floor = kDefaultSingularFloor);
/// Derivative of duality_defect at ρ.
Mat32 duality_jacobian(const Rho& rho, const LorentzVector& v);

/// Orthonormal basis (32 x k) of the chosen tangent space at ρ.
///   SL2O:  kernel of grad_det.
///   SU2O:  kernel of the linearized duality equation for (1,0,1).
///   SU11O: kernel of the linearized duality equation for (-1,0,1).
///   SL2H:  matrices with entries in span(H), tangent to det = const;
///          ρ itself must have entries in span(H).
/// Throws PreconditionError for an empty subspace.
Eigen::MatrixXd tangent_basis(const Rho& rho, Subspace s,
                              const std::optional<QuaternionSubalgebra>& h =
                                  std::nullopt);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  std::vector<double> eigenvalues;  // descending

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative &&
           a.zero == b.zero;
  }
};

/// Sign counts of a symmetric matrix; |λ| <= rel * max|λ| counts as zero.
Signature signature_of(const Eigen::MatrixXd& sym, double rel = 1e-8);

/// Signature of hessian_log_det(ρ) restricted to tangent_basis(ρ, s, h).
Signature restricted_signature(
    const Rho& rho, Subspace s,
    const std::optional<QuaternionSubalgebra>& h = std::nullopt,
    double floor = kDefaultSingularFloor);

struct NormalForm {
  ConformalWord word;
  Eigen::Matrix2d p;
  Rho rho;
};

/// Moves the zero of psi2 to infinity and that of psi1 to the origin with
/// an even word, then scales the columns to unit length:
///   ρ_norm = apply(word, ρ) P,  phi1+ = phi2- = 0,  |phi1-| = |phi2+| = 1.
NormalForm normalize(const Rho& rho, double floor = kDefaultSingularFloor);

/// Maps ρ onto SU(2,O): centers the two zeros at ±h, dilates them to the
/// antipodal pair ±h/|h| and rescales both columns to unit norm.
Rho retract(const Rho& rho, double floor = kDefaultSingularFloor);

/// Quaternion coordinates of the entries (a, b, c, d), each q0 + q1 i +
/// q2 j + q3 k.
using QuaternionEntries = std::array<std::array<double, 4>, 4>;

/// Embeds a quaternionic matrix through H; each entry q is placed as
/// conj(ι_H(q)) so that det ρ equals the quaternionic determinant.
Rho sl2h_embed(const QuaternionSubalgebra& h, const QuaternionEntries& m);
/// Inverse of sl2h_embed; throws PreconditionError if an entry lies
/// outside span(H).
QuaternionEntries sl2h_coordinates(const QuaternionSubalgebra& h,
                                   const Rho& rho, double tol = 1e-10);

}  // namespace octosl
