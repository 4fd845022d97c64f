#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

#include "elliptica/constants.hpp"
#include "elliptica/extremals.hpp"
#include "elliptica/harness.hpp"
#include "elliptica/mapping_io.hpp"
#include "elliptica/oracles.hpp"
#include "elliptica/report.hpp"

namespace elliptica::cli {

namespace {

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct ConstantsArgs {
  double K = 1.0, Kp = 0.0, lam = 1.0;
  std::optional<double> M;
  bool json = false, csv = false;
};

struct ExtremalArgs {
  std::string family;
  int n = 2;
  std::optional<double> lam, M;
  int N = kDefaultTruncation;
  std::string out;
};

struct CheckArgs {
  std::string map, mode, grid;
  double r = 0.0;
  std::optional<double> rho;
};

struct VerifyArgs {
  std::string which, out, grid;
  double K = 1.0, Kp = 0.0, lam = 2.0, shrink = 1.0;
  std::uint64_t seed = 1;
  std::optional<int> count;
  bool timestamp = false, no_evidence = false;
};

struct ReportArgs {
  std::string in;
  bool csv = false;
};

struct BoundaryArgs {
  std::string map, out;
  double r = 0.0;
  int n_theta = 1024;
};

int cmd_constants(const ConstantsArgs& a, std::ostream& out) {
  const EllipticityParams params(a.K, a.Kp);
  const DistortionBound lam(a.lam);
  const auto l = landau(params, lam);
  const auto b3 = bloch_theorem3(params);
  const auto c1 = bloch_corollary1(params);
  std::vector<std::pair<std::string, double>> cols{{"K", a.K},       {"Kp", a.Kp},          {"lam", a.lam},
                                                   {"T", l.T},       {"r1", l.r1},          {"sigma1", l.sigma1},
                                                   {"t", b3.t},      {"rho1", b3.rho},      {"t_c1", c1.t},
                                                   {"rho2", c1.rho}};
  if (a.M) {
    const auto cl = classical_landau(*a.M);
    cols.insert(cols.end(), {{"M", cl.M}, {"r0", cl.r0}, {"R0", cl.R0}});
  }
  if (a.csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].first;
    out << '\n';
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << g17(cols[i].second);
    out << '\n';
  } else {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : cols) j[k] = v;
    out << j.dump(2) << '\n';
  }
  return kOk;
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  ExtremalSpec spec{parse_extremal_family(a.family), a.n, 0.0};
  const auto& param = spec.family == ExtremalFamily::classical_landau ? a.M : a.lam;
  if (!param) {
    throw std::invalid_argument(spec.family == ExtremalFamily::classical_landau ? "family classical requires --M"
                                                                              : "this family requires --lam");
  }
  spec.parameter = *param;
  const auto f = build(spec, a.N);
  write_map_file(a.out, f);
  nlohmann::ordered_json j{{"family", to_string(spec.family)},
                           {"degree", f.degree()},
                           {"tail_bound", f.tail_bound()},
                           {"r_ref", f.reference_radius()},
                           {"out", a.out}};
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const auto spec = a.grid.empty() ? SamplingSpec::oracle_default() : SamplingSpec::parse_grid(a.grid);
  if (a.mode == "coverage" && !a.rho) throw std::invalid_argument("--mode coverage requires --rho");
  if (!(a.r > 0.0 && a.r < 1.0)) throw std::invalid_argument("--r must lie in (0, 1)");
  const auto f = read_map_file(a.map);
  const auto v = a.mode == "univalence" ? univalence_probe(f, a.r, spec) : coverage_probe(f, a.r, *a.rho, spec);
  out << to_json(verdict_from(a.mode, v)).dump(2) << '\n';
  return v.status == VerdictStatus::refuted ? kRefuted : kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const EllipticityParams params(a.K, a.Kp);
  const DistortionBound lam(a.lam);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  if (a.which == "remarks") {
    report = remark_report(a.count.value_or(1000));
  } else {
    const int count = a.count.value_or(a.which == "1" || a.which == "2" ? 20 : 3);
    const auto maps = campaign_maps(a.which, params, lam, a.seed, count);
    if (a.which == "1") {
      report = verify_theorem1(params, lam, maps);
    } else if (a.which == "2") {
      const auto spec = a.grid.empty() ? SamplingSpec::oracle_default() : SamplingSpec::parse_grid(a.grid);
      report = verify_theorem2(params, lam, maps, spec);
    } else {
      const auto grid = a.grid.empty() ? SamplingSpec::distortion_default() : SamplingSpec::parse_grid(a.grid);
      if (a.which == "3") {
        PipelineOptions opts;
        opts.shrink = a.shrink;
        opts.evidence = !a.no_evidence;
        report = verify_theorem3(params, maps, grid, opts);
      } else {
        report = verify_corollary1_report(params, maps, grid);
      }
    }
    report.params["lam"] = a.lam;
    report.params["seed"] = a.seed;
    report.params["count"] = count;
  }
  if (a.timestamp) {
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  write_report(a.out, report);
  const auto refuted = report.refutations();
  out << "theorem " << report.theorem << ": " << report.maps.size() << " maps, " << refuted << " refutations\n";
  return refuted > 0 ? kRefuted : kOk;
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  std::ifstream in(a.in);
  if (!in) throw std::runtime_error("cannot open report " + a.in);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse report " + a.in + ": " + e.what());
  }
  const auto s = summarize(j);
  if (a.csv) {
    out << "status,count\n";
    for (const auto& [status, n] : s.status_counts) out << status << ',' << n << '\n';
  } else {
    nlohmann::ordered_json o{{"theorem", s.theorem},
                             {"maps", s.maps},
                             {"status_counts", s.status_counts},
                             {"refutations", s.refutations},
                             {"worst_case", s.worst_case}};
    out << o.dump(2) << '\n';
  }
  return s.refutations > 0 ? kRefuted : kOk;
}

int cmd_boundary(const BoundaryArgs& a) {
  if (!(a.r > 0.0 && a.r < 1.0)) throw std::invalid_argument("--r must lie in (0, 1)");
  if (a.n_theta < 1) throw std::invalid_argument("--n-theta must be positive");
  const auto f = read_map_file(a.map);
  std::ofstream csv(a.out);
  if (!csv) throw std::runtime_error("cannot write boundary curve " + a.out);
  csv << "theta,re,im\n";
  for (int k = 0; k < a.n_theta; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / a.n_theta;
    const auto w = eval(f, std::polar(a.r, theta));
    csv << g17(theta) << ',' << g17(w.real()) << ',' << g17(w.imag()) << '\n';
  }
  if (!csv) throw std::runtime_error("error while writing " + a.out);
  return kOk;
}

void apply_thread_cap() {
  const char* env = std::getenv("ELLIPTICA_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw std::invalid_argument("ELLIPTICA_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical toolkit for Landau and Bloch radii of elliptic harmonic mappings", "elliptica"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "Evaluate the closed-form radii and constants");
  constants->add_option("--K", ca.K, "ellipticity constant K >= 1")->required();
  constants->add_option("--Kp", ca.Kp, "ellipticity constant K' >= 0")->required();
  constants->add_option("--lam", ca.lam, "bound on lambda_f, lam >= 1")->required();
  constants->add_option("--M", ca.M, "bound for the classical Landau radii, M >= 1");
  auto* json_flag = constants->add_flag("--json", ca.json, "JSON output (default)");
  constants->add_flag("--csv", ca.csv, "CSV output")->excludes(json_flag);

  ExtremalArgs ea;
  auto* extremal = app.add_subcommand("extremal", "Build an extremal mapping and write it as JSON");
  extremal->add_option("--family", ea.family, "Fn, fn or classical")->required();
  extremal->add_option("--n", ea.n, "index n >= 2 (Fn, fn)");
  extremal->add_option("--lam", ea.lam, "lam (Fn) or Lambda (fn)");
  extremal->add_option("--M", ea.M, "M > 1 (classical)");
  extremal->add_option("--N", ea.N, "truncation degree");
  extremal->add_option("--out", ea.out, "output mapping file")->required();

  CheckArgs ka;
  auto* check = app.add_subcommand("check-map", "Run the univalence or coverage oracle on a mapping file");
  check->add_option("--map", ka.map, "mapping file")->required();
  check->add_option("--r", ka.r, "disk radius in (0, 1)")->required();
  check->add_option("--mode", ka.mode, "univalence or coverage")
      ->required()
      ->check(CLI::IsMember({"univalence", "coverage"}));
  check->add_option("--rho", ka.rho, "target image disk radius (coverage)");
  check->add_option("--grid", ka.grid, "n_r,n_theta");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-theorem", "Run a verification campaign and write a JSON report");
  verify->add_option("--which", va.which, "1, 2, 3, c1 or remarks")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "c1", "remarks"}));
  verify->add_option("--K", va.K, "ellipticity constant K >= 1");
  verify->add_option("--Kp", va.Kp, "ellipticity constant K' >= 0");
  verify->add_option("--lam", va.lam, "bound on lambda_f");
  verify->add_option("--seed", va.seed, "first random map seed");
  verify->add_option("--count", va.count, "number of random maps (samples for remarks)");
  verify->add_option("--grid", va.grid, "n_r,n_theta");
  verify->add_option("--shrink", va.shrink, "run the pipeline on z -> f(shrink z)");
  verify->add_flag("--no-evidence", va.no_evidence, "skip the oracle evidence in the pipeline");
  verify->add_flag("--timestamp", va.timestamp, "record the runtime in the report");
  verify->add_option("--out", va.out, "report file")->required();

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Summarise a verification report");
  report->add_option("--in", ra.in, "report file")->required();
  report->add_flag("--csv", ra.csv, "CSV output");

  BoundaryArgs ba;
  auto* boundary = app.add_subcommand("boundary", "Write the image of a circle as CSV");
  boundary->add_option("--map", ba.map, "mapping file")->required();
  boundary->add_option("--r", ba.r, "circle radius in (0, 1)")->required();
  boundary->add_option("--n-theta", ba.n_theta, "number of samples");
  boundary->add_option("--out", ba.out, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    apply_thread_cap();
    if (constants->parsed()) return cmd_constants(ca, out);
    if (extremal->parsed()) return cmd_extremal(ea, out);
    if (check->parsed()) return cmd_check(ka, out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (report->parsed()) return cmd_report(ra, out);
    if (boundary->parsed()) return cmd_boundary(ba);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace elliptica::cli
