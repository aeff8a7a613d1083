#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <utility>

#include "octosl/invariants.hpp"
#include "octosl/quaternion_check.hpp"

namespace octosl {

/// splitmix64 step: stream `index` of a root seed.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t index);

/// Random inputs for the property suites. Gaussian coordinates throughout.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Octonion octonion();
  Octonion unit_imaginary();
  std::pair<Octonion, Octonion> orthonormal_imaginary_pair();
  QuaternionSubalgebra subalgebra();

  Vector8 vector8() { return {octonion()}; }
  Vector8 unit_vector8();
  Spinor spinor(Chirality c) { return {c, octonion()}; }
  Twistor twistor(Duality d = Duality::Primal);
  LorentzVector lorentz();

  Rho rho();
  /// Resamples until |det ρ| >= rel * |ρ|^4.
  Rho regular_rho(double rel = 1e-3);

  /// Even word of 1..max_blocks blocks: translation, reflection pair,
  /// dilation, or inversion-translation-inversion.
  ConformalWord even_word(int max_blocks = 4);
  /// Even word fixing v = (1, 0, 1): reflection pairs and
  /// inversion-reflection pairs.
  ConformalWord su2_stabilizer_word(int max_blocks = 4);

  Eigen::Matrix2d gl2();
  Eigen::Matrix2d sl2();

  Quaternion quaternion();
  QMat2 qmat2();

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

}  // namespace octosl
