#include "octosl/lorentz.hpp"

#include <cmath>

#include "octosl/error.hpp"
#include "octosl/twistor.hpp"

namespace octosl {

LorentzVector operator+(const LorentzVector& f, const LorentzVector& g) {
  return {f.a + g.a, f.b + g.b, f.c + g.c};
}
LorentzVector operator-(const LorentzVector& f, const LorentzVector& g) {
  return {f.a - g.a, f.b - g.b, f.c - g.c};
}
LorentzVector operator*(double s, const LorentzVector& f) {
  return {s * f.a, s * f.b, s * f.c};
}

double euclidean_norm(const LorentzVector& f) {
  return std::sqrt(f.a * f.a + f.b.norm2() + f.c * f.c);
}

double lorentz_form(const LorentzVector& f, const LorentzVector& g) {
  return inner(f.b, g.b) - 2.0 * f.a * g.c - 2.0 * g.a * f.c;
}

Reflection::Reflection(const Vector8& n) : n_(n) {
  if (!(std::abs(n.coords.norm() - 1.0) <= 1e-10))
    throw PreconditionError("reflection normal must have unit norm");
}

Dilation::Dilation(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw PreconditionError("dilation parameter must be positive");
}

bool reverses_orientation(const ConformalGenerator& g) {
  return std::holds_alternative<Reflection>(g) ||
         std::holds_alternative<Inversion>(g);
}

void ConformalWord::append(const ConformalWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(),
                  other.letters_.end());
}

int ConformalWord::parity() const {
  int p = 0;
  for (const auto& g : letters_) p ^= reverses_orientation(g) ? 1 : 0;
  return p;
}

namespace {

struct VectorActionVisitor {
  const LorentzVector& f;

  LorentzVector operator()(const Translation& g) const {
    return {f.a, f.b + (2.0 * f.a) * g.t,
            f.a * g.t.norm2() + inner(g.t, f.b) + f.c};
  }
  LorentzVector operator()(const Reflection& g) const {
    const Vector8& n = g.normal();
    return {f.a, f.b - (2.0 * inner(f.b, n)) * n, f.c};
  }
  LorentzVector operator()(const Inversion&) const { return {f.c, f.b, f.a}; }
  LorentzVector operator()(const Dilation& g) const {
    return {g.lambda() * f.a, f.b, f.c / g.lambda()};
  }
};

}  // namespace

LorentzVector vector_action(const ConformalGenerator& g,
                            const LorentzVector& f) {
  return std::visit(VectorActionVisitor{f}, g);
}

LorentzVector vector_action(const ConformalWord& w, const LorentzVector& f) {
  LorentzVector out = f;
  for (const auto& g : w.letters()) out = vector_action(g, out);
  return out;
}

Twistor clifford_action(const LorentzVector& f, const Twistor& psi) {
  const Spinor& lo = psi.phi_minus;
  const Spinor& hi = psi.phi_plus;
  Spinor new_lo = clifford(f.b, lo) - (2.0 * f.a) * hi;
  Spinor new_hi = -(clifford(f.b, hi) + (2.0 * f.c) * lo);
  return Twistor(flip(psi.duality), new_lo, new_hi);
}

}  // namespace octosl
