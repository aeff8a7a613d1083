// One line per acceptance criterion; exit status 0 iff all pass.
#include <cstdio>
#include <string>
#include <vector>

#include "octosl/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* label;
  const char* suite;
  int samples;
  double tolerance;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Clifford/triality identities", "clifford", 1000, 1e-12},
      {2, "double Clifford action = -L(f,f)", "lorentz", 1000, 1e-10},
      {3, "L(f11,f22) = -2 L(f12,f21)", "identity", 1000, 1e-10},
      {4, "Q(psi) is null", "nullity", 1000, 1e-10},
      {5, "mu invariance and (det P)^2 covariance", "invariance", 200, 1e-9},
      {6, "mu = -3 qdet = -3 complex det", "quaternion-oracle", 500, 1e-9},
      {7, "restricted Hessian signatures", "signature", 20, 0.0},
      {8, "closed-form Hessian at rho0", "hessian", 1, 1e-12},
      {9, "normal form post-conditions", "normalize", 100, 1e-8},
      {10, "SU(2,O) duality membership", "duality", 50, 1e-8},
      {11, "derivatives vs finite differences", "derivatives", 50, 1e-5},
  };

  bool all = true;
  for (const auto& c : criteria) {
    octosl::SuiteOptions opts;
    opts.samples = c.samples;
    opts.tolerance = c.tolerance;
    opts.seed = 20241015;
    const octosl::SuiteReport r = octosl::run_suite(c.suite, opts);
    bool pass = r.pass && r.wall_time < 60.0;
    std::string extra;
    if (c.id == 7) {
      const auto& d = r.details;
      extra = " sl2o=" + d["sl2o"].dump() + " su2o=" + d["su2o"].dump() +
              " su11o=" + d["su11o"].dump() + " sl2h=" + d["sl2h"].dump() +
              " orbit=" + d["orbit_22_9"].dump() + "/" + d["orbit_points"].dump() +
              " sl2h_random=" + d["sl2h_10_5"].dump() + "/" + d["sl2h_points"].dump();
    }
    if (c.id == 10) {
      const double ref = r.details["reference_residual"].get<double>();
      pass = pass && ref <= 1e-12;
      char buf[64];
      std::snprintf(buf, sizeof buf, " rho0_residual=%.3e (tol 1e-12)", ref);
      extra = buf;
    }
    all = all && pass;
    std::printf("criterion %2d %-4s %-42s suite=%-17s n=%-4d max_residual=%.3e tol=%.1e time=%.3fs%s\n",
                c.id, pass ? "PASS" : "FAIL", c.label, c.suite, r.samples,
                r.max_residual, r.tolerance, r.wall_time, extra.c_str());
  }
  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}
