#include "octosl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "octosl/sampling.hpp"

namespace octosl {
namespace {

struct Tracker {
  double worst = 0.0;
  void add(double r) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    worst = std::max(worst, r);
  }
};

using SuiteFn = std::function<double(Sampler&, int, Json&)>;

struct Entry {
  const char* name;
  int samples;
  double tolerance;
  SuiteFn run;
};

double rel(double diff, double scale) {
  return scale > 0.0 ? std::abs(diff) / scale : std::abs(diff);
}

double twistor_norm(const Twistor& t) { return std::sqrt(t.norm2()); }

double lorentz_dist(const LorentzVector& f, const LorentzVector& g) {
  return euclidean_norm(f - g);
}

double octonion_suite(Sampler& s, int n, Json&) {
  Tracker t;
  const Octonion one = Octonion::real(1.0);
  for (int i = 0; i < n; ++i) {
    const Octonion x = s.octonion(), y = s.octonion(), z = s.octonion();
    const double nx = x.norm(), ny = y.norm(), nz = z.norm();
    t.add(rel((x * y).norm() - nx * ny, nx * ny));
    t.add(rel((x * (x * y) - (x * x) * y).norm(), nx * nx * ny));
    t.add(rel(((x * y) * (z * x) - x * ((y * z) * x)).norm(),
              nx * nx * ny * nz));
    t.add(rel(((x * y) * z).re() - (x * (y * z)).re(), nx * ny * nz));
    t.add((x * x.inverse() - one).norm());
    t.add(rel((x * x.conj() - x.norm2() * one).norm(), x.norm2()));
  }
  return t.worst;
}

double clifford_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    const Vector8 x = s.vector8(), y = s.vector8();
    const Spinor p = s.spinor(Chirality::Plus), m = s.spinor(Chirality::Minus);
    const double nx = std::sqrt(x.norm2()), ny = std::sqrt(y.norm2());
    const double np = std::sqrt(p.norm2()), nm = std::sqrt(m.norm2());
    for (const Spinor& phi : {p, m}) {
      const double nphi = std::sqrt(phi.norm2());
      t.add(rel(std::sqrt((clifford(x, clifford(x, phi)) + x.norm2() * phi)
                              .norm2()),
                x.norm2() * nphi));
      t.add(rel(std::sqrt((clifford(x, clifford(y, phi)) +
                           clifford(y, clifford(x, phi)) +
                           (2.0 * inner(x, y)) * phi)
                              .norm2()),
                nx * ny * nphi));
      t.add(rel(std::sqrt(clifford(x, phi).norm2()) - nx * nphi, nx * nphi));
    }
    const Vector8 pm = pair_spinors(p, m);
    const double scale = nx * np * nm;
    t.add(rel(inner(x, pm) - inner(p, clifford(x, m)), scale));
    t.add(rel(inner(x, pm) + inner(clifford(x, p), m), scale));
    t.add(rel(std::sqrt(pm.norm2()) - np * nm, np * nm));
  }
  return t.worst;
}

double lorentz_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    const LorentzVector f = s.lorentz(), g = s.lorentz();
    const Twistor psi =
        s.twistor(s.integer(0, 1) == 0 ? Duality::Primal : Duality::Dual);
    const double nf = euclidean_norm(f);
    const Twistor twice = clifford_action(f, clifford_action(f, psi));
    t.add(rel(twistor_norm(twice + lorentz_form(f, f) * psi),
              nf * nf * twistor_norm(psi)));

    const ConformalWord w = s.even_word(4);
    const LorentzVector wf = vector_action(w, f), wg = vector_action(w, g);
    t.add(rel(lorentz_form(wf, wg) - lorentz_form(f, g),
              euclidean_norm(wf) * euclidean_norm(wg) +
                  nf * euclidean_norm(g)));
  }
  return t.worst;
}

double identity_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    const Rho r = s.rho();
    const double scale = r.norm2() * r.norm2();
    const LorentzVector f11 = f_ab(r.psi1, r.psi1), f22 = f_ab(r.psi2, r.psi2);
    const LorentzVector f12 = f_ab(r.psi1, r.psi2), f21 = f_ab(r.psi2, r.psi1);
    t.add(rel(lorentz_form(f11, f22) + 2.0 * lorentz_form(f12, f21), scale));
    t.add(rel(mu_null(r) + 2.0 * det_rho(r), scale));
    t.add(rel(mu(r) + 3.0 * det_rho(r), scale));
    t.add(rel(det_closed_form(r) - det_rho(r), scale));
    t.add(rel(lorentz_dist(p_map(r.psi1, r.psi2),
                           p_map_by_pairing(r.psi1, r.psi2)),
              r.norm2()));
  }
  return t.worst;
}

double nullity_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    const LorentzVector q = q_map(s.twistor());
    const double nq = euclidean_norm(q);
    t.add(rel(lorentz_form(q, q), nq * nq));
  }
  return t.worst;
}

double invariance_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    const Rho r = s.regular_rho(1e-2);
    const double m = mu(r);
    t.add(rel(mu(apply(s.even_word(4), r)) - m, std::abs(m)));
    t.add(rel(mu(right_multiply(r, s.sl2())) - m, std::abs(m)));
    const Eigen::Matrix2d p = s.gl2();
    const double d2 = p.determinant() * p.determinant();
    t.add(rel(mu(right_multiply(r, p)) - d2 * m, d2 * std::abs(m)));
    const double k = s.uniform(0.5, 2.0);
    t.add(rel(det_rho(k * r) - std::pow(k, 4) * det_rho(r),
              std::pow(k, 4) * std::abs(det_rho(r))));
  }
  return t.worst;
}

double quaternion_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    const QMat2 m = s.qmat2(), other = s.qmat2();
    const QuaternionSubalgebra h = s.subalgebra();
    const double scale = m.norm2() * m.norm2();
    const MuQdet mq = mu_vs_qdet(m, h);
    t.add(rel(mq.mu + 3.0 * mq.det, 3.0 * scale));
    t.add(rel(mq.det - cdet_oracle(m), scale));
    t.add(rel(cdet_complex(m).imag(), scale));
    t.add(rel(cdet_alternative(m) - mq.det, scale));
    t.add(rel(charpoly_imaginary_residual(m), std::max(1.0, scale)));
    const Eigen::Matrix4cd prod = embed_complex(m * other);
    const Eigen::Matrix4cd expect = embed_complex(m) * embed_complex(other);
    t.add(rel((prod - expect).cwiseAbs().maxCoeff(),
              std::sqrt(m.norm2() * other.norm2())));
  }
  return t.worst;
}

Json counts(const Signature& sig) {
  return Json::array({sig.positive, sig.negative, sig.zero});
}

double signature_suite(Sampler& s, int n, Json& details) {
  double mismatches = 0.0;
  const Rho r0 = Rho::reference();
  const auto check = [&](const Signature& got, int p, int q) {
    if (got.positive != p || got.negative != q || got.zero != 0)
      mismatches += 1.0;
  };
  const Signature sl2o = restricted_signature(r0, Subspace::SL2O);
  const Signature su2o = restricted_signature(r0, Subspace::SU2O);
  const Signature su11o = restricted_signature(r0, Subspace::SU11O);
  const Signature sl2h =
      restricted_signature(r0, Subspace::SL2H, QuaternionSubalgebra::standard());
  check(sl2o, 22, 9);
  check(su2o, 22, 0);
  check(su11o, 14, 8);
  check(sl2h, 10, 5);
  details["sl2o"] = counts(sl2o);
  details["su2o"] = counts(su2o);
  details["su11o"] = counts(su11o);
  details["sl2h"] = counts(sl2h);

  int orbit_ok = 0;
  for (int i = 0; i < n; ++i) {
    const Rho r = right_multiply(apply(s.even_word(4), r0), s.gl2());
    const Signature sig = restricted_signature(r, Subspace::SL2O);
    check(sig, 22, 9);
    orbit_ok += sig == Signature{22, 9, 0, {}};
  }
  const int quaternionic = std::max(1, n / 2);
  int sl2h_ok = 0;
  for (int i = 0; i < quaternionic; ++i) {
    const QuaternionSubalgebra h = s.subalgebra();
    QMat2 m = s.qmat2();
    while (qdet(m) < 1e-2 * m.norm2() * m.norm2()) m = s.qmat2();
    const Signature sig =
        restricted_signature(sl2h_embed(h, m.entries()), Subspace::SL2H, h);
    check(sig, 10, 5);
    sl2h_ok += sig == Signature{10, 5, 0, {}};
  }
  details["orbit_points"] = n;
  details["orbit_22_9"] = orbit_ok;
  details["sl2h_points"] = quaternionic;
  details["sl2h_10_5"] = sl2h_ok;
  return mismatches;
}

Mat32 hessian_closed_form() {
  Mat32 c = Mat32::Zero();
  constexpr int a = 0, b = 8, cc = 16, d = 24;
  for (int i = 0; i < 8; ++i) {
    c(a + i, a + i) = 2.0;
    c(d + i, d + i) = 2.0;
    const double v = i == 0 ? -2.0 : 2.0;  // -4 Re(bc)
    c(b + i, cc + i) = c(cc + i, b + i) = v;
  }
  c(a, d) = c(d, a) = 4.0;
  return c;
}

Mat32 trace_form() {
  // 2 (sum_i tr A_i^2 - tr A_0^2)
  Mat32 c = Mat32::Zero();
  for (int i = 0; i < 8; ++i) {
    const double sgn = i == 0 ? -1.0 : 1.0;
    c(i, i) = c(24 + i, 24 + i) = 2.0 * sgn;
    c(8 + i, 16 + i) = c(16 + i, 8 + i) = 2.0 * sgn;
  }
  return c;
}

double hessian_suite(Sampler&, int, Json&) {
  Tracker t;
  const Rho r0 = Rho::reference();
  t.add((hessian_det(r0) - hessian_closed_form()).cwiseAbs().maxCoeff());
  const Eigen::MatrixXd basis = tangent_basis(r0, Subspace::SL2O);
  const Mat32 hlog = hessian_log_det(r0);
  t.add((basis.transpose() * (hlog - trace_form()) * basis)
            .cwiseAbs()
            .maxCoeff());
  return t.worst;
}

double normalize_suite(Sampler& s, int n, Json&) {
  Tracker t;
  for (int i = 0; i < n; ++i) {
    Rho r = s.rho();
    while (std::abs(det_rho(r)) <= 1e-6) r = s.rho();
    const NormalForm nf = normalize(r);
    const auto m = nf.rho.matrix();
    t.add(m[1].norm());
    t.add(m[2].norm());
    t.add(std::abs(m[0].norm() - 1.0));
    t.add(std::abs(m[3].norm() - 1.0));
    t.add(nf.word.parity() == 0 ? 0.0 : 1.0);
    const double dp = nf.p.determinant();
    t.add(rel(det_rho(nf.rho) - dp * dp * det_rho(r), det_rho(nf.rho)));
    const Rho again = right_multiply(apply(nf.word, r), nf.p);
    t.add(std::sqrt((again - nf.rho).norm2()));
  }
  return t.worst;
}

double duality_suite(Sampler& s, int n, Json& details) {
  Tracker t;
  const Rho r0 = Rho::reference();
  const double ref = duality_residual(r0, su2_vector());
  details["reference_residual"] = ref;
  t.add(ref);
  for (int i = 0; i < n; ++i) {
    t.add(duality_residual(apply(s.su2_stabilizer_word(4), r0), su2_vector()));
    Rho r = s.regular_rho(1e-3);
    r = std::pow(det_rho(r), -0.25) * r;
    t.add(duality_residual(retract(r), su2_vector()));
  }
  return t.worst;
}

Vec32 grad_log_det(const Vec32& v) {
  const Rho r = Rho::from_vector(v);
  return grad_det(r) / det_rho(r);
}

double derivatives_suite(Sampler& s, int n, Json&) {
  Tracker t;
  constexpr double h = 1e-5;
  for (int i = 0; i < n; ++i) {
    const Rho r = s.regular_rho(1e-2);
    const Vec32 v = r.to_vector();
    const Vec32 g = grad_det(r);
    Vec32 g_fd;
    Mat32 h_fd;
    for (int k = 0; k < 32; ++k) {
      const Vec32 e = h * Vec32::Unit(k);
      g_fd[k] = (det_rho(Rho::from_vector(v + e)) -
                 det_rho(Rho::from_vector(v - e))) /
                (2.0 * h);
      h_fd.col(k) = (grad_log_det(v + e) - grad_log_det(v - e)) / (2.0 * h);
    }
    t.add((g - g_fd).cwiseAbs().maxCoeff() / g.cwiseAbs().maxCoeff());
    const Mat32 hl = hessian_log_det(r);
    t.add((hl - h_fd).cwiseAbs().maxCoeff() / hl.cwiseAbs().maxCoeff());
  }
  return t.worst;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"octonion", 1000, 1e-12, octonion_suite},
      {"clifford", 1000, 1e-12, clifford_suite},
      {"lorentz", 1000, 1e-10, lorentz_suite},
      {"identity", 1000, 1e-10, identity_suite},
      {"nullity", 1000, 1e-10, nullity_suite},
      {"invariance", 200, 1e-9, invariance_suite},
      {"quaternion-oracle", 500, 1e-9, quaternion_suite},
      {"signature", 20, 0.0, signature_suite},
      {"hessian", 1, 1e-12, hessian_suite},
      {"normalize", 100, 1e-8, normalize_suite},
      {"duality", 50, 1e-8, duality_suite},
      {"derivatives", 50, 1e-5, derivatives_suite},
  };
  return entries;
}

const Entry& lookup(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e;
  throw std::out_of_range("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) !=
         suite_names().end();
}

int default_samples(const std::string& name) { return lookup(name).samples; }
double default_tolerance(const std::string& name) {
  return lookup(name).tolerance;
}

std::uint64_t suite_seed(std::uint64_t root, const std::string& name) {
  const auto& names = suite_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("unknown suite: " + name);
  return split_seed(root, static_cast<std::uint64_t>(it - names.begin()));
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const Entry& e = lookup(name);
  SuiteReport r;
  r.name = name;
  r.samples = opts.samples.value_or(e.samples);
  r.tolerance = opts.tolerance.value_or(e.tolerance);
  r.seed = suite_seed(opts.seed, name);
  if (r.samples < 1) throw std::invalid_argument("samples must be >= 1");

  Sampler sampler(r.seed);
  const auto start = std::chrono::steady_clock::now();
  r.max_residual = e.run(sampler, r.samples, r.details);
  r.wall_time = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

Json to_json(const SuiteReport& r, bool with_time) {
  Json j = {{"suite", r.name},
            {"samples", r.samples},
            {"max_residual", r.max_residual},
            {"tolerance", r.tolerance},
            {"pass", r.pass},
            {"seed", r.seed}};
  if (with_time) j["wall_time"] = r.wall_time;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

}  // namespace octosl
