#include <gtest/gtest.h>

#include <cmath>

#include "octosl/error.hpp"
#include "octosl/invariants.hpp"
#include "octosl/sampling.hpp"
#include "octosl/twistor.hpp"

using namespace octosl;

namespace {

double tnorm(const Twistor& t) { return std::sqrt(t.norm2()); }

std::vector<ConformalGenerator> generators(Sampler& s) {
  return {Translation{s.vector8()}, Reflection(s.unit_vector8()), Inversion{},
          Dilation(std::exp(s.uniform(-1.0, 1.0)))};
}

}  // namespace

TEST(Twistor, ChiralityTagsFollowDuality) {
  const Twistor p = Twistor::primal(Octonion::real(1.0), Octonion());
  EXPECT_EQ(p.phi_minus.chirality, Chirality::Minus);
  const Twistor d = Twistor::dual(Octonion::real(1.0), Octonion());
  EXPECT_EQ(d.phi_minus.chirality, Chirality::Plus);
  EXPECT_THROW(Twistor(Duality::Primal, Spinor::plus({}), Spinor::minus({})),
               PreconditionError);
  EXPECT_THROW(p + d, PreconditionError);
}

TEST(Twistor, Evaluate) {
  Sampler s(41);
  const Octonion lo = s.octonion(), hi = s.octonion();
  EXPECT_EQ(evaluate(Twistor::primal(lo, Octonion()), Vector8{}).coords, Octonion());
  EXPECT_EQ(evaluate(Twistor::primal(Octonion(), hi), s.vector8()).coords, hi);
  // phi+ = -c . phi-  vanishes at x = c
  const Vector8 c = s.vector8();
  const Spinor phi_m = Spinor::minus(lo);
  const Twistor psi(Duality::Primal, phi_m, -clifford(c, phi_m));
  EXPECT_LT(std::sqrt(evaluate(psi, c).norm2()), 1e-12 * c.coords.norm() * lo.norm());
}

TEST(Twistor, GeneratorActions) {
  Sampler s(42);
  const Twistor psi = s.twistor();
  const Vector8 t = s.vector8();
  const Twistor tr = act(Translation{t}, psi);
  EXPECT_EQ(tr.duality, Duality::Primal);
  EXPECT_EQ(tr.phi_minus, psi.phi_minus);
  EXPECT_EQ(tr.phi_plus, clifford(t, psi.phi_minus) + psi.phi_plus);

  const Twistor inv = act(Inversion{}, psi);
  EXPECT_EQ(inv.duality, Duality::Dual);
  EXPECT_EQ(inv.phi_minus.coords, psi.phi_plus.coords);
  EXPECT_EQ(inv.phi_plus.coords, -psi.phi_minus.coords);
  const Twistor inv2 = act(Inversion{}, inv);
  EXPECT_EQ(inv2, -1.0 * psi);

  EXPECT_EQ(act(Dilation(1.0), psi), psi);
  const Twistor dil = act(Dilation(4.0), psi);
  EXPECT_EQ(dil.phi_minus.coords, 2.0 * psi.phi_minus.coords);
  EXPECT_EQ(dil.phi_plus.coords, 0.5 * psi.phi_plus.coords);

  const Vector8 n = s.unit_vector8();
  const Twistor ref = act(Reflection(n), psi);
  EXPECT_EQ(ref.duality, Duality::Dual);
  EXPECT_EQ(ref.phi_minus, -clifford(n, psi.phi_minus));
  EXPECT_EQ(ref.phi_plus, clifford(n, psi.phi_plus));
}

TEST(Twistor, ActionIsLinear) {
  Sampler s(43);
  for (int n = 0; n < 100; ++n) {
    const Twistor a = s.twistor(), b = s.twistor();
    const double k = s.normal();
    ConformalWord w = s.even_word(4);
    w.push_back(Inversion{});
    const Twistor lhs = act(w, a + k * b);
    const Twistor rhs = act(w, a) + k * act(w, b);
    EXPECT_LE(max_abs_difference(lhs, rhs), 1e-12 * (tnorm(lhs) + tnorm(rhs)));
  }
}

TEST(Twistor, ProjectionExamples) {
  Sampler s(44);
  const Octonion lo = s.octonion(), hi = s.octonion();
  const PointS8 origin = project(Twistor::primal(lo, Octonion()));
  EXPECT_LT(origin.distance(PointS8::at(Vector8{})), 1e-15);
  const PointS8 inf = project(Twistor::primal(Octonion(), hi));
  EXPECT_LT(inf.distance(PointS8::infinity()), 1e-15);
  EXPECT_FALSE(inf.finite_point().has_value());

  const Vector8 c = s.vector8();
  const Spinor phi_m = Spinor::minus(lo);
  const Twistor psi(Duality::Primal, phi_m, -clifford(c, phi_m));
  const auto z = project(psi).finite_point();
  ASSERT_TRUE(z.has_value());
  EXPECT_LT((z->coords - c.coords).norm(), 1e-12 * (1.0 + c.coords.norm()));
  EXPECT_THROW(project(Twistor::zero()), DomainError);
}

TEST(Twistor, ZeroLocusAgreesWithProjection) {
  Sampler s(45);
  for (int n = 0; n < 200; ++n) {
    const Twistor psi = s.twistor(n % 2 ? Duality::Dual : Duality::Primal);
    const auto z = zero_locus(psi);
    ASSERT_TRUE(z.has_value());
    EXPECT_LT(std::sqrt(evaluate(psi, *z).norm2()), 1e-12 * tnorm(psi) * (1.0 + z->coords.norm()));
    EXPECT_LT(project(psi).distance(PointS8::at(*z)), 1e-12);
  }
  EXPECT_FALSE(zero_locus(Twistor::primal(Octonion(), Octonion::real(1.0))));
}

TEST(Twistor, ProjectionIsEquivariant) {
  Sampler s(46);
  for (int n = 0; n < 1000; ++n) {
    const Twistor psi = s.twistor(n % 2 ? Duality::Dual : Duality::Primal);
    const LorentzVector q = q_map(psi);
    for (const auto& g : generators(s)) {
      const PointS8 moved = project(act(g, psi));
      const PointS8 expect = PointS8::from_ray(vector_action(g, q));
      EXPECT_LT(moved.distance(expect), 1e-10);
    }
  }
}

TEST(Twistor, PointS8Validation) {
  EXPECT_THROW(PointS8::from_ray({}), DomainError);
  EXPECT_THROW(PointS8::from_ray({1.0, {}, 1.0}), DomainError);
  const PointS8 p = PointS8::from_ray({2.0, {}, 0.0});
  EXPECT_DOUBLE_EQ(p.ray().a + p.ray().c, 1.0);
}

TEST(Twistor, DualPairingMakesCliffordPairingSymmetric) {
  Sampler s(47);
  for (int n = 0; n < 300; ++n) {
    const Twistor a = s.twistor(), b = s.twistor();
    const LorentzVector f = s.lorentz();
    const double lhs = dual_pairing(clifford_action(f, a), b);
    const double rhs = dual_pairing(clifford_action(f, b), a);
    EXPECT_NEAR(lhs, rhs, 1e-12 * euclidean_norm(f) * tnorm(a) * tnorm(b));
    EXPECT_NEAR(dual_pairing(a, clifford_action(f, b)), lhs,
                1e-12 * euclidean_norm(f) * tnorm(a) * tnorm(b));
  }
  EXPECT_THROW(dual_pairing(Twistor::zero(), Twistor::zero()), PreconditionError);
}
