#include <gtest/gtest.h>

#include <cmath>

#include "octosl/error.hpp"
#include "octosl/lorentz.hpp"
#include "octosl/sampling.hpp"
#include "octosl/twistor.hpp"

using namespace octosl;

namespace {

// f(x) = a |x|^2 + (x, b) + c, evaluated directly.
double eval(const LorentzVector& f, const Octonion& x) {
  return f.a * x.norm2() + inner(x, f.b.coords) + f.c;
}

double dist(const LorentzVector& f, const LorentzVector& g) {
  return euclidean_norm(f - g);
}

double tnorm(const Twistor& t) { return std::sqrt(t.norm2()); }

}  // namespace

TEST(Lorentz, FormValues) {
  EXPECT_DOUBLE_EQ(lorentz_form({1.0, {}, 1.0}, {1.0, {}, 1.0}), -4.0);
  const Vector8 b{Octonion(Octonion::Coords{1, 2, 0, 0, 0, 0, 0, 3})};
  EXPECT_DOUBLE_EQ(lorentz_form({0.0, b, 0.0}, {0.0, b, 0.0}), 14.0);
  EXPECT_DOUBLE_EQ(lorentz_form({1.0, {}, 0.0}, {0.0, {}, 1.0}), -2.0);
}

TEST(Lorentz, FormIsSymmetricAndMatchesDiagonal) {
  Sampler s(31);
  for (int n = 0; n < 100; ++n) {
    const LorentzVector f = s.lorentz(), g = s.lorentz();
    EXPECT_NEAR(lorentz_form(f, g), lorentz_form(g, f), 1e-13);
    EXPECT_NEAR(lorentz_form(f, f), f.b.norm2() - 4.0 * f.a * f.c, 1e-12);
  }
}

TEST(Lorentz, VectorActionExamples) {
  EXPECT_EQ(vector_action(Inversion{}, {1.0, {}, 0.0}),
            (LorentzVector{0.0, {}, 1.0}));
  const Vector8 b{Octonion::unit(3)};
  EXPECT_EQ(vector_action(Dilation(4.0), {0.0, b, 0.0}),
            (LorentzVector{0.0, b, 0.0}));
  Sampler s(32);
  EXPECT_EQ(vector_action(Translation{s.vector8()}, {0.0, {}, 1.0}),
            (LorentzVector{0.0, {}, 1.0}));
}

TEST(Lorentz, VectorActionIsPullBackOfQuadratic) {
  Sampler s(33);
  for (int n = 0; n < 200; ++n) {
    const LorentzVector f = s.lorentz();
    const Octonion x = s.octonion();
    const Vector8 t = s.vector8();
    const Vector8 nrm = s.unit_vector8();
    const double lam = std::exp(s.uniform(-1.0, 1.0));
    const double scale = 1.0 + euclidean_norm(f) * (1.0 + x.norm2() + t.norm2());

    EXPECT_NEAR(eval(vector_action(Translation{t}, f), x), eval(f, x + t.coords),
                1e-12 * scale);
    const Octonion rx = x - (2.0 * inner(x, nrm.coords)) * nrm.coords;
    EXPECT_NEAR(eval(vector_action(Reflection(nrm), f), x), eval(f, rx),
                1e-12 * scale);
    const double r2 = x.norm2();
    EXPECT_NEAR(eval(vector_action(Inversion{}, f), x), r2 * eval(f, x / r2),
                1e-12 * scale * (1.0 + 1.0 / r2));
    EXPECT_NEAR(eval(vector_action(Dilation(lam), f), x),
                eval(f, lam * x) / lam, 1e-12 * scale * (lam + 1.0 / lam));
  }
}

TEST(Lorentz, VectorActionPreservesForm) {
  Sampler s(34);
  for (int n = 0; n < 500; ++n) {
    const LorentzVector f = s.lorentz(), g = s.lorentz();
    ConformalWord w = s.even_word(4);
    if (n % 2) w.push_back(Inversion{});
    const LorentzVector wf = vector_action(w, f), wg = vector_action(w, g);
    EXPECT_NEAR(lorentz_form(wf, wg), lorentz_form(f, g),
                1e-10 * (euclidean_norm(wf) * euclidean_norm(wg) +
                         euclidean_norm(f) * euclidean_norm(g)));
  }
}

TEST(Lorentz, CliffordActionClosedForms) {
  Sampler s(35);
  const Octonion lo = s.octonion(), hi = s.octonion();
  const Vector8 b = s.vector8();
  const Twistor a = clifford_action({0.0, b, 0.0}, Twistor::primal(lo, Octonion()));
  EXPECT_EQ(a.duality, Duality::Dual);
  EXPECT_EQ(a.phi_minus, clifford(b, Spinor::minus(lo)));
  EXPECT_EQ(a.phi_plus.coords, Octonion());

  const Twistor v = clifford_action({1.0, {}, 1.0}, Twistor::primal(lo, hi));
  EXPECT_EQ(v.phi_minus.coords, -2.0 * hi);
  EXPECT_EQ(v.phi_plus.coords, -2.0 * lo);
}

TEST(Lorentz, CliffordActionSquaresToMinusL) {
  Sampler s(36);
  for (int n = 0; n < 1000; ++n) {
    const LorentzVector f = s.lorentz();
    const Twistor psi = s.twistor(n % 2 ? Duality::Dual : Duality::Primal);
    const Twistor twice = clifford_action(f, clifford_action(f, psi));
    EXPECT_EQ(twice.duality, psi.duality);
    const double nf = euclidean_norm(f);
    EXPECT_LE(tnorm(twice + lorentz_form(f, f) * psi), 1e-10 * nf * nf * tnorm(psi));
  }
}

TEST(Lorentz, GeneratorPreconditions) {
  EXPECT_THROW(Reflection(Vector8{2.0 * Octonion::unit(1)}), PreconditionError);
  EXPECT_THROW(Dilation(0.0), PreconditionError);
  EXPECT_THROW(Dilation(-1.0), PreconditionError);
  EXPECT_THROW(Dilation(std::nan("")), PreconditionError);
  EXPECT_NO_THROW(Reflection(Vector8{Octonion::unit(5)}));
}

TEST(Lorentz, WordParity) {
  ConformalWord w;
  EXPECT_EQ(w.parity(), 0);
  w.push_back(Inversion{});
  EXPECT_EQ(w.parity(), 1);
  w.push_back(Translation{});
  w.push_back(Dilation(2.0));
  EXPECT_EQ(w.parity(), 1);
  w.push_back(Reflection(Vector8{Octonion::unit(2)}));
  EXPECT_EQ(w.parity(), 0);
  EXPECT_EQ(w.size(), 4u);
}
