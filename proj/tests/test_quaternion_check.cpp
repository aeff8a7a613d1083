#include <gtest/gtest.h>

#include <cmath>

#include "octosl/quaternion_check.hpp"
#include "octosl/sampling.hpp"

using namespace octosl;

namespace {
double scale4(const QMat2& m) { return m.norm2() * m.norm2(); }
}  // namespace

TEST(QuaternionCheck, QuaternionProductTable) {
  const Quaternion i{{0, 1, 0, 0}}, j{{0, 0, 1, 0}}, k{{0, 0, 0, 1}};
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -1.0 * k);
  EXPECT_EQ(i * i, Quaternion::real(-1.0));
}

TEST(QuaternionCheck, EmbeddingBlocks) {
  EXPECT_TRUE(embed_complex(QMat2::identity()).isApprox(Eigen::Matrix4cd::Identity()));
  Eigen::Matrix2cd jb;
  jb << 0.0, 1.0, -1.0, 0.0;
  EXPECT_TRUE(embed_complex(Quaternion{{0, 0, 1, 0}}).isApprox(jb));
}

TEST(QuaternionCheck, EmbeddingIsHomomorphism) {
  Sampler s(81);
  for (int n = 0; n < 100; ++n) {
    const QMat2 m = s.qmat2(), o = s.qmat2();
    EXPECT_LT((embed_complex(m * o) - embed_complex(m) * embed_complex(o)).cwiseAbs().maxCoeff(),
              1e-12 * std::sqrt(m.norm2() * o.norm2()));
    const Quaternion p = s.quaternion(), q = s.quaternion();
    EXPECT_LT((embed_complex(p * q) - embed_complex(p) * embed_complex(q)).cwiseAbs().maxCoeff(),
              1e-12 * std::sqrt(p.norm2() * q.norm2()));
  }
}

TEST(QuaternionCheck, DeterminantExamples) {
  EXPECT_NEAR(cdet_oracle(QMat2::identity()), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(qdet(QMat2::identity()), 1.0);
  Sampler s(82);
  const Quaternion q1 = s.quaternion(), q2 = s.quaternion();
  const QMat2 diag{q1, {}, {}, q2};
  EXPECT_NEAR(cdet_oracle(diag), q1.norm2() * q2.norm2(), 1e-12 * scale4(diag));
  EXPECT_NEAR(qdet(diag), q1.norm2() * q2.norm2(), 1e-12 * scale4(diag));
  // second row a left multiple of the first
  for (int n = 0; n < 50; ++n) {
    const Quaternion a = s.quaternion(), b = s.quaternion(), q = s.quaternion();
    const QMat2 sing{a, b, q * a, q * b};
    EXPECT_LE(std::abs(cdet_oracle(sing)), 1e-10 * scale4(sing));
    EXPECT_LE(std::abs(qdet(sing)), 1e-10 * scale4(sing));
  }
}

TEST(QuaternionCheck, QdetMatchesComplexOracle) {
  Sampler s(83);
  for (int n = 0; n < 500; ++n) {
    const QMat2 m = s.qmat2();
    const double sc = scale4(m);
    const auto c = cdet_complex(m);
    EXPECT_LE(std::abs(c.imag()), 1e-10 * sc);
    EXPECT_GE(c.real(), -1e-10 * sc);
    EXPECT_NEAR(qdet(m), c.real(), 1e-10 * sc);
    EXPECT_GE(qdet(m), -1e-12 * sc);
    EXPECT_NEAR(cdet_alternative(m), c.real(), 1e-10 * sc);
    EXPECT_LE(charpoly_imaginary_residual(m), 1e-10 * std::max(1.0, sc));
  }
}

TEST(QuaternionCheck, MuIsMinusThreeQdet) {
  const auto id = mu_vs_qdet(QMat2::identity(), QuaternionSubalgebra::standard());
  EXPECT_DOUBLE_EQ(id.mu, -3.0);
  EXPECT_DOUBLE_EQ(id.det, 1.0);
  const auto zero = mu_vs_qdet(QMat2{}, QuaternionSubalgebra::standard());
  EXPECT_EQ(zero.mu, 0.0);
  EXPECT_EQ(zero.det, 0.0);
  Sampler s(84);
  for (int n = 0; n < 500; ++n) {
    const QMat2 m = s.qmat2();
    const auto r = mu_vs_qdet(m, s.subalgebra());
    EXPECT_NEAR(r.mu, -3.0 * r.det, 3e-9 * scale4(m));
  }
}

TEST(QuaternionCheck, RestrictedMetricSignature) {
  const Signature sig = qdet_restricted_signature(QMat2::identity());
  EXPECT_EQ(sig.positive, 10);
  EXPECT_EQ(sig.negative, 5);
  EXPECT_EQ(sig.zero, 0);
}
