#include "octosl/sampling.hpp"

#include <cmath>

namespace octosl {

std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Octonion Sampler::octonion() {
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = normal();
  return x;
}

Octonion Sampler::unit_imaginary() {
  for (;;) {
    const Octonion x = octonion().im();
    const double n = x.norm();
    if (n > 1e-3) return x / n;
  }
}

std::pair<Octonion, Octonion> Sampler::orthonormal_imaginary_pair() {
  const Octonion u = unit_imaginary();
  for (;;) {
    const Octonion w = unit_imaginary();
    const Octonion v = w - inner(w, u) * u;
    const double n = v.norm();
    if (n > 1e-3) return {u, v / n};
  }
}

QuaternionSubalgebra Sampler::subalgebra() {
  const auto [u, v] = orthonormal_imaginary_pair();
  return QuaternionSubalgebra::generate(u, v);
}

Vector8 Sampler::unit_vector8() {
  for (;;) {
    const Octonion x = octonion();
    const double n = x.norm();
    if (n > 1e-3) return {x / n};
  }
}

Twistor Sampler::twistor(Duality d) {
  const Chirality lo = Twistor::lo_chirality(d);
  return Twistor(d, spinor(lo), spinor(opposite(lo)));
}

LorentzVector Sampler::lorentz() { return {normal(), vector8(), normal()}; }

Rho Sampler::rho() { return {twistor(), twistor()}; }

Rho Sampler::regular_rho(double rel) {
  for (;;) {
    Rho r = rho();
    const double n2 = r.norm2();
    if (std::abs(det_rho(r)) >= rel * n2 * n2) return r;
  }
}

ConformalWord Sampler::even_word(int max_blocks) {
  ConformalWord w;
  const int blocks = integer(1, max_blocks);
  for (int k = 0; k < blocks; ++k) {
    switch (integer(0, 3)) {
      case 0:
        w.push_back(Translation{0.5 * vector8()});
        break;
      case 1:
        w.push_back(Reflection(unit_vector8()));
        w.push_back(Reflection(unit_vector8()));
        break;
      case 2:
        w.push_back(Dilation(std::exp(uniform(-0.7, 0.7))));
        break;
      default:
        w.push_back(Inversion{});
        w.push_back(Translation{0.5 * vector8()});
        w.push_back(Inversion{});
        break;
    }
  }
  return w;
}

ConformalWord Sampler::su2_stabilizer_word(int max_blocks) {
  ConformalWord w;
  const int blocks = integer(1, max_blocks);
  for (int k = 0; k < blocks; ++k) {
    if (integer(0, 1) == 0) {
      w.push_back(Reflection(unit_vector8()));
      w.push_back(Reflection(unit_vector8()));
    } else {
      w.push_back(Inversion{});
      w.push_back(Reflection(unit_vector8()));
    }
  }
  return w;
}

Eigen::Matrix2d Sampler::gl2() {
  for (;;) {
    Eigen::Matrix2d p;
    p << normal(), normal(), normal(), normal();
    if (std::abs(p.determinant()) > 0.1) return p;
  }
}

Eigen::Matrix2d Sampler::sl2() {
  Eigen::Matrix2d p = gl2();
  if (p.determinant() < 0.0) p.col(0) *= -1.0;
  return p / std::sqrt(p.determinant());
}

Quaternion Sampler::quaternion() {
  return {{normal(), normal(), normal(), normal()}};
}

QMat2 Sampler::qmat2() { return {quaternion(), quaternion(), quaternion(), quaternion()}; }

}  // namespace octosl
