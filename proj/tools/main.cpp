#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "octosl/error.hpp"
#include "octosl/invariants.hpp"
#include "octosl/json_io.hpp"
#include "octosl/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kSuiteFail = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

struct VerifyArgs {
  std::string suite = "all";
  int samples = 0;
  double tol = -1.0;
  std::uint64_t seed = 42;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = octosl::suite_names();
  } else if (octosl::has_suite(a.suite)) {
    names = {a.suite};
  } else {
    std::cerr << "unknown suite '" << a.suite << "'; available: all";
    for (const auto& n : octosl::suite_names()) std::cerr << ", " << n;
    std::cerr << "\n";
    return kUsage;
  }

  octosl::SuiteOptions opts;
  opts.seed = a.seed;
  if (a.samples > 0) opts.samples = a.samples;
  if (a.tol >= 0.0) opts.tolerance = a.tol;

  bool all_pass = true;
  octosl::Json reports = octosl::Json::array();
  for (const auto& name : names) {
    const octosl::SuiteReport r = octosl::run_suite(name, opts);
    all_pass = all_pass && r.pass;
    if (a.json) {
      reports.push_back(octosl::to_json(r));
    } else {
      std::printf("%-18s %-4s samples=%-5d max_residual=%.3e tol=%.1e seed=%llu time=%.3fs\n",
                  r.name.c_str(), r.pass ? "PASS" : "FAIL", r.samples,
                  r.max_residual, r.tolerance,
                  static_cast<unsigned long long>(r.seed), r.wall_time);
      if (r.details.contains("sl2o"))
        std::printf("  signatures: sl2o=%s su2o=%s su11o=%s sl2h=%s\n",
                    r.details["sl2o"].dump().c_str(),
                    r.details["su2o"].dump().c_str(),
                    r.details["su11o"].dump().c_str(),
                    r.details["sl2h"].dump().c_str());
    }
  }
  if (a.json) {
    octosl::Json out = {{"seed", a.seed}, {"pass", all_pass}, {"suites", reports}};
    std::cout << out.dump(2) << "\n";
  }
  return all_pass ? kPass : kSuiteFail;
}

int cmd_det(const std::string& path) {
  const octosl::Rho rho = octosl::rho_from_json(octosl::read_json_file(path));
  std::printf("det      %.15g\n", octosl::det_rho(rho) + 0.0);
  std::printf("mu       %.15g\n", octosl::mu(rho) + 0.0);
  std::printf("mu_null  %.15g\n", octosl::mu_null(rho) + 0.0);
  return kPass;
}

int cmd_normalize(const std::string& in, const std::string& out) {
  const octosl::Rho rho = octosl::rho_from_json(octosl::read_json_file(in));
  const octosl::NormalForm nf = octosl::normalize(rho);
  std::ofstream f(out);
  if (!f) {
    std::cerr << out << ": cannot write\n";
    return kUsage;
  }
  f << octosl::to_json(nf).dump(2) << "\n";
  return kPass;
}

int cmd_signature(const std::string& path, const std::string& subspace,
                  const std::string& subalgebra) {
  const octosl::Rho rho = octosl::rho_from_json(octosl::read_json_file(path));
  octosl::Subspace s;
  std::optional<octosl::QuaternionSubalgebra> h;
  if (subspace == "sl2o") {
    s = octosl::Subspace::SL2O;
  } else if (subspace == "su2o") {
    s = octosl::Subspace::SU2O;
  } else if (subspace == "su11o") {
    s = octosl::Subspace::SU11O;
  } else {
    s = octosl::Subspace::SL2H;
    h = octosl::QuaternionSubalgebra::standard();
    if (!subalgebra.empty()) {
      const octosl::Json j = octosl::read_json_file(subalgebra);
      if (!j.is_object() || !j.contains("u") || !j.contains("v"))
        throw octosl::ParseError(subalgebra + ": expected {\"u\": [8], \"v\": [8]}");
      h = octosl::QuaternionSubalgebra::generate(
          octosl::octonion_from_json(j["u"], "$.u"),
          octosl::octonion_from_json(j["v"], "$.v"));
    }
  }
  const octosl::Signature sig = octosl::restricted_signature(rho, s, h);
  std::printf("signature (%d, %d, %d)\n", sig.positive, sig.negative, sig.zero);
  const auto& ev = sig.eigenvalues;
  const std::size_t k = std::min<std::size_t>(5, ev.size());
  std::printf("largest ");
  for (std::size_t i = 0; i < k; ++i) std::printf(" %.6e", ev[i]);
  std::printf("\nsmallest");
  for (std::size_t i = ev.size() - k; i < ev.size(); ++i) std::printf(" %.6e", ev[i]);
  std::printf("\n");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic SL(2) invariants: verification and evaluation"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run randomized verification suites");
  verify->add_option("--suite", va.suite, "Suite name or 'all'");
  verify->add_option("--samples", va.samples, "Samples per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", va.tol, "Tolerance override")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.seed, "Root seed");
  verify->add_flag("--json", va.json, "Emit a JSON report");

  std::string det_file;
  auto* det = app.add_subcommand("det", "Print det and mu of a rho file");
  det->add_option("file", det_file)->required();

  std::string norm_in, norm_out;
  auto* norm = app.add_subcommand("normalize", "Reduce rho to diagonal unit form");
  norm->add_option("input", norm_in)->required();
  norm->add_option("-o,--output", norm_out)->required();

  std::string sig_file, subspace = "sl2o", subalgebra;
  auto* sig = app.add_subcommand("signature", "Restricted Hessian signature");
  sig->add_option("file", sig_file)->required();
  sig->add_option("--subspace", subspace)
      ->check(CLI::IsMember({"sl2o", "su2o", "su11o", "sl2h"}));
  sig->add_option("--subalgebra", subalgebra,
                  "JSON {u, v} generating H (sl2h only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*det) return cmd_det(det_file);
    if (*norm) return cmd_normalize(norm_in, norm_out);
    if (*sig) return cmd_signature(sig_file, subspace, subalgebra);
  } catch (const octosl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const octosl::PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const octosl::DomainError& e) {
    std::cerr << "numerical domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
