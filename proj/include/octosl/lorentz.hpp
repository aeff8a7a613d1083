#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "octosl/triality.hpp"

namespace octosl {

struct Twistor;

/// f = a |x|^2 + (x, b) + c, a vector of R^{9,1}.
struct LorentzVector {
  double a = 0.0;
  Vector8 b;
  double c = 0.0;

  friend bool operator==(const LorentzVector&, const LorentzVector&) = default;
};

LorentzVector operator+(const LorentzVector& f, const LorentzVector& g);
LorentzVector operator-(const LorentzVector& f, const LorentzVector& g);
LorentzVector operator*(double s, const LorentzVector& f);
/// Euclidean size sqrt(a^2 + |b|^2 + c^2), used for relative tolerances.
double euclidean_norm(const LorentzVector& f);

/// L(f, g) = (b_f, b_g) - 2 a_f c_g - 2 a_g c_f, so L(f, f) = |b|^2 - 4ac.
double lorentz_form(const LorentzVector& f, const LorentzVector& g);

struct Translation {
  Vector8 t;
};

/// Reflection in the hyperplane orthogonal to a unit vector.
class Reflection {
 public:
  /// Throws PreconditionError unless |n| = 1 to within 1e-10.
  explicit Reflection(const Vector8& n);
  const Vector8& normal() const { return n_; }

 private:
  Vector8 n_;
};

/// x -> x / |x|^2
struct Inversion {};

/// x -> lambda x, lambda > 0.
class Dilation {
 public:
  explicit Dilation(double lambda);
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

using ConformalGenerator =
    std::variant<Translation, Reflection, Inversion, Dilation>;

bool reverses_orientation(const ConformalGenerator& g);

/// A finite product of generators, applied first letter first.
class ConformalWord {
 public:
  ConformalWord() = default;
  explicit ConformalWord(std::vector<ConformalGenerator> letters)
      : letters_(std::move(letters)) {}

  void push_back(const ConformalGenerator& g) { letters_.push_back(g); }
  void append(const ConformalWord& other);

  const std::vector<ConformalGenerator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Number of orientation-reversing letters mod 2.
  int parity() const;

 private:
  std::vector<ConformalGenerator> letters_;
};

/// Action on quadratic solutions (conformal weight -1), pulling back along
/// the generator exactly as the twistor action does:
///   Translation t:  f(x + t)       = (a, b + 2at, a|t|^2 + (t,b) + c)
///   Reflection n:   f(R_n x)       = (a, b - 2(b,n)n, c)
///   Inversion:      |x|^2 f(x/|x|^2) = (c, b, a)
///   Dilation l:     f(l x) / l     = (l a, b, c / l)
LorentzVector vector_action(const ConformalGenerator& g,
                            const LorentzVector& f);
LorentzVector vector_action(const ConformalWord& w, const LorentzVector& f);

/// Clifford action of f on a twistor (Dirac-operator construction):
///   (phi-, phi+) -> (b.phi- - 2a phi+, -(b.phi+ + 2c phi-)),
/// flipping the duality flag. Applying the same f twice gives -L(f,f).
Twistor clifford_action(const LorentzVector& f, const Twistor& psi);

}  // namespace octosl
