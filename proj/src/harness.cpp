#include "elliptica/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "elliptica/distortion.hpp"
#include "elliptica/extremals.hpp"

namespace elliptica {

namespace {

constexpr double kSampledTol = 1e-9;
constexpr double kCoeffTol = 1e-10;
constexpr int kGeneratorDegree = 8;
constexpr int kGeneratorRounds = 60;

nlohmann::json params_json(const EllipticityParams& params) { return {{"K", params.K()}, {"Kp", params.Kp()}}; }

const char* holds_or(bool ok, const char* otherwise) { return ok ? "holds" : otherwise; }

Verdict simple(std::string check, bool ok, double margin, std::string note = {}) {
  Verdict v;
  v.check = std::move(check);
  v.status = holds_or(ok, "refuted");
  v.margin = margin;
  v.note = std::move(note);
  return v;
}

// Appends the hypothesis verdict; returns false when the map is excluded.
bool hypotheses_verdict(MapRecord& rec, const HarmonicMap& f, const EllipticityParams& params,
                        const DistortionBound& lam, Execution exec) {
  const auto h = check_hypotheses(f, params, lam, exec);
  Verdict v;
  v.check = "hypotheses";
  v.status = h.ok ? "holds" : "excluded";
  v.margin = h.min_margin;
  v.note = h.ok ? "sup lambda " + std::to_string(h.sup_lambda) : h.reason;
  rec.verdicts.push_back(std::move(v));
  return h.ok;
}

void coefficient_slacks(MapRecord& rec, const HarmonicMap& f, const EllipticityParams& params,
                        const DistortionBound& lam) {
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= f.degree(); ++n) {
    const double slack = coeff_bound(n, params, lam) - (std::abs(f.a(n)) + std::abs(f.b(n)));
    rec.slacks.push_back({"coeff_bound", n, slack});
    worst = std::min(worst, slack);
  }
  if (f.degree() < 2) worst = 0.0;
  rec.verdicts.push_back(simple("coefficient_bound", worst >= -kCoeffTol, worst));
}

EvaluableMap shrunk(const EvaluableMap& f, double s) {
  EvaluableMap g;
  g.value = [f, s](Complex z) { return f.value(s * z); };
  g.partials = [f, s](Complex z) {
    const auto d = f.partials(s * z);
    return Wirtinger{s * d.dz, s * d.dzbar};
  };
  if (f.has_majorant()) {
    g.majorant = [f, s](int k, double r) { return std::pow(s, k) * f.majorant(k, s * r); };
  }
  return g;
}

double weighted_lambda(const EvaluableMap& f, Complex z) { return (1.0 - std::norm(z)) * profile(f, z).lambda_min; }

}  // namespace

MobiusAutomorphism::MobiusAutomorphism(Complex z0) : z0_(z0) {
  if (!(std::abs(z0) < 1.0)) throw std::invalid_argument("Mobius automorphism requires |z0| < 1");
}

Complex MobiusAutomorphism::derivative(Complex z) const noexcept {
  const Complex den = 1.0 + std::conj(z0_) * z;
  return (1.0 - std::norm(z0_)) / (den * den);
}

HarmonicMap random_elliptic(const EllipticityParams& params, const DistortionBound& lam, std::uint64_t seed) {
  if (params.K() * lam.value() < 1.0) throw std::invalid_argument("random_elliptic requires K lam >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // |a1| = 1 + |b1| keeps lambda_f(0) = 1; Lambda_f(0) = 1 + 2|b1| must stay
  // below the largest Lambda allowed when J = Lambda.
  const double K = params.K();
  const double Kp = params.Kp();
  const double headroom = 0.5 * (K + std::sqrt(K * K + 4.0 * Kp)) - 1.0;
  const double b1_abs = std::min(0.3 * unit(rng), 0.45 * headroom);
  const double beta1 = 2.0 * std::numbers::pi * unit(rng);
  const double beta2 = 2.0 * std::numbers::pi * unit(rng);

  std::vector<Complex> a_hi, b_hi;
  for (int n = 2; n <= kGeneratorDegree; ++n) {
    const double ar = gauss(rng), ai = gauss(rng), br = gauss(rng), bi = gauss(rng);
    a_hi.emplace_back(ar / n, ai / n);
    b_hi.push_back(headroom > 0.0 ? Complex(br / n, bi / n) : Complex(0.0));
  }

  const Complex a1 = std::polar(1.0 + b1_abs, beta1);
  const Complex b1 = b1_abs > 0.0 ? std::polar(b1_abs, beta2) : Complex(0.0);
  double scale = 1.0;
  for (int round = 0; round < kGeneratorRounds; ++round, scale *= 0.5) {
    std::vector<Complex> a{0.0, a1};
    std::vector<Complex> b{b1};
    for (std::size_t k = 0; k < a_hi.size(); ++k) {
      a.push_back(scale * a_hi[k]);
      b.push_back(scale * b_hi[k]);
    }
    HarmonicMap f(std::move(a), std::move(b));
    const auto sup = sup_lambda_min(f, kHypothesisRadius);
    if (sup.value > lam.value()) continue;
    const auto ell = ellipticity_check(f, params, kHypothesisRadius);
    if (ell.min_margin >= 0.0 && ell.sense_preserving_everywhere_sampled) return f;
  }
  throw std::runtime_error("generator exhausted");
}

HypothesisCheck check_hypotheses(const HarmonicMap& f, const EllipticityParams& params, const DistortionBound& lam,
                                 Execution exec) {
  HypothesisCheck h{true, {}, std::abs(eval(f, 0.0)), profile(f, 0.0).lambda_min, 0.0, 0.0};
  h.sup_lambda = sup_lambda_min(f, kHypothesisRadius, SamplingSpec::distortion_default(), exec).value;
  h.min_margin =
      ellipticity_check(f, params, kHypothesisRadius, SamplingSpec::distortion_default(), exec).min_margin;
  if (h.value_at_origin > 1e-12) {
    h.ok = false;
    h.reason = "f(0) != 0";
  } else if (std::abs(h.lambda_at_origin - 1.0) > kSampledTol) {
    h.ok = false;
    h.reason = "lambda_f(0) != 1";
  } else if (h.sup_lambda > lam.value() + kSampledTol) {
    h.ok = false;
    h.reason = "sampled lambda_f exceeds lam";
  } else if (h.min_margin < -kSampledTol) {
    h.ok = false;
    h.reason = "sampled ellipticity margin negative";
  }
  return h;
}

Report verify_theorem1(const EllipticityParams& params, const DistortionBound& lam, std::span<const NamedMap> maps,
                       Execution exec) {
  Report report;
  report.theorem = "1";
  report.params = params_json(params);
  report.params["lam"] = lam.value();
  for (const auto& m : maps) {
    MapRecord rec{m.id, m.source, {}, {}};
    if (hypotheses_verdict(rec, m.map, params, lam, exec)) coefficient_slacks(rec, m.map, params, lam);
    report.maps.push_back(std::move(rec));
  }
  return report;
}

Report verify_theorem2(const EllipticityParams& params, const DistortionBound& lam, std::span<const NamedMap> maps,
                       const SamplingSpec& spec, Execution exec) {
  const auto radii = landau(params, lam);
  const double r = radii.r1 * (1.0 - 1e-6);
  const double rho = radii.sigma1 * (1.0 - 1e-3);
  Report report;
  report.theorem = "2";
  report.params = params_json(params);
  report.params["lam"] = lam.value();
  report.params["r1"] = radii.r1;
  report.params["sigma1"] = radii.sigma1;
  report.params["r"] = r;
  report.params["rho"] = rho;
  for (const auto& m : maps) {
    MapRecord rec{m.id, m.source, {}, {}};
    if (hypotheses_verdict(rec, m.map, params, lam, exec)) {
      coefficient_slacks(rec, m.map, params, lam);
      rec.verdicts.push_back(verdict_from("univalence", univalence_probe(m.map, r, spec, exec)));
      rec.verdicts.push_back(verdict_from("coverage", coverage_probe(m.map, r, rho, spec, exec)));
    }
    report.maps.push_back(std::move(rec));
  }
  return report;
}

EvaluableMap recentred_map(const EvaluableMap& f, Complex z0, double M) {
  const MobiusAutomorphism phi(z0);
  const Complex base = f.value(z0);
  const double root2 = std::numbers::sqrt2;
  EvaluableMap g;
  g.value = [f, phi, base, M, root2](Complex w) { return root2 * (f.value(phi(w / root2)) - base) / M; };
  g.partials = [f, phi, M, root2](Complex w) {
    const Complex zeta = w / root2;
    const Complex dphi = phi.derivative(zeta);
    const auto d = f.partials(phi(zeta));
    return Wirtinger{d.dz * dphi / M, d.dzbar * std::conj(dphi) / M};
  };
  return g;
}

PipelineTrace theorem3_pipeline(const EvaluableMap& f_in, const EllipticityParams& params, const SamplingSpec& grid,
                                const PipelineOptions& options, Execution exec) {
  if (!(options.shrink > 0.0 && options.shrink <= 1.0)) {
    throw std::invalid_argument("theorem3_pipeline: shrink must lie in (0, 1]");
  }
  if (std::abs(profile(f_in, 0.0).lambda_min - 1.0) > kSampledTol) {
    throw std::invalid_argument("theorem3_pipeline: requires lambda_f(0) = 1");
  }
  const EvaluableMap f = options.shrink == 1.0 ? f_in : shrunk(f_in, options.shrink);

  const auto pts = polar_grid(kHypothesisRadius, grid.n_r(), grid.n_theta());
  const auto best = kernels::argmax(exec, pts.size(), [&](std::size_t i) { return weighted_lambda(f, pts[i]); });
  Complex z0 = pts[best.index];
  double M = best.value;
  double step = kHypothesisRadius / grid.n_r();
  for (int it = 0; step > 1e-13 && it < 100000; ++it) {
    bool improved = false;
    for (const Complex dir : {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)}) {
      const Complex c = z0 + step * dir;
      if (std::abs(c) > kHypothesisRadius) continue;
      const double v = weighted_lambda(f, c);
      if (v > M) {
        z0 = c;
        M = v;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  if (!(M > 0.0)) throw std::runtime_error("theorem3_pipeline: degenerate map, sup (1-|z|^2) lambda_f = 0");

  const auto G = recentred_map(f, z0, M);
  const auto profiles = kernels::map<DistortionProfile>(exec, pts.size(), [&](std::size_t i) { return profile(G, pts[i]); });
  const double K = params.K();
  const double Kp4 = 4.0 * params.Kp();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (profiles[i].jacobian < 0.0) {
      throw std::runtime_error("theorem3_pipeline: G reverses orientation near w = (" +
                               std::to_string(pts[i].real()) + ", " + std::to_string(pts[i].imag()) + ")");
    }
  }
  const auto worst_lambda = kernels::argmax(Execution::serial, pts.size(), [&](std::size_t i) {
    return profiles[i].lambda_min - 2.0 / (2.0 - std::norm(pts[i]));
  });
  const auto worst_margin = kernels::argmin_serial(pts.size(), [&](std::size_t i) {
    return K * profiles[i].jacobian + Kp4 - profiles[i].op_norm_sq;
  });

  PipelineTrace trace{M,
                      z0,
                      worst_lambda.value,
                      worst_margin.value,
                      profile(G, 0.0).lambda_min,
                      pts[worst_lambda.index],
                      pts[worst_margin.index],
                      static_cast<long>(pts.size()),
                      std::nullopt,
                      std::nullopt};
  if (options.evidence) {
    const auto t = bloch_theorem3(params).t;
    const double r = (1.0 / (1.0 + t)) * (1.0 - 1e-6);
    trace.univalence_evidence = univalence_probe(G, r, options.oracle_spec, exec);
    trace.coverage_evidence = coverage_probe(G, r, psi(t) * (1.0 - 1e-3), options.oracle_spec, exec);
  }
  return trace;
}

PipelineTrace theorem3_pipeline(const HarmonicMap& f, const EllipticityParams& params, const SamplingSpec& grid,
                                const PipelineOptions& options, Execution exec) {
  return theorem3_pipeline(as_evaluable(f), params, grid, options, exec);
}

Report verify_theorem3(const EllipticityParams& params, std::span<const NamedMap> maps, const SamplingSpec& grid,
                       const PipelineOptions& options, Execution exec) {
  Report report;
  report.theorem = "3";
  report.params = params_json(params);
  report.params["shrink"] = options.shrink;
  const auto bloch = bloch_theorem3(params);
  report.params["t"] = bloch.t;
  report.params["rho1"] = bloch.rho;
  for (const auto& m : maps) {
    MapRecord rec{m.id, m.source, {}, {}};
    const auto tr = theorem3_pipeline(m.map, params, grid, options, exec);
    Verdict centre;
    centre.check = "recentring";
    centre.status = "holds";
    centre.margin = tr.M_sup;
    centre.witness = {tr.z0};
    centre.note = "M and argmax z0 of (1-|z|^2) lambda_f";
    rec.verdicts.push_back(std::move(centre));
    rec.verdicts.push_back(simple("lambda_G_bound", tr.lambda_G_violation <= kSampledTol, -tr.lambda_G_violation));
    rec.verdicts.push_back(simple("ellipticity_K_4Kp", tr.ellipticity_4Kp_margin >= -kSampledTol,
                                  tr.ellipticity_4Kp_margin));
    const double origin_err = std::abs(tr.lambda_G_at_origin - 1.0);
    rec.verdicts.push_back(simple("lambda_G_origin", origin_err <= 1e-12, -origin_err));
    for (const auto& [name, ev] : {std::pair{"univalence_evidence", &tr.univalence_evidence},
                                   std::pair{"coverage_evidence", &tr.coverage_evidence}}) {
      if (!*ev) continue;
      auto v = verdict_from(name, **ev);
      v.note += " (evidence)";
      rec.verdicts.push_back(std::move(v));
    }
    rec.slacks.push_back({"lambda_G", 0, -tr.lambda_G_violation});
    rec.slacks.push_back({"ellipticity_K_4Kp", 0, tr.ellipticity_4Kp_margin});
    report.maps.push_back(std::move(rec));
  }
  return report;
}

Corollary1Check verify_corollary1(const HarmonicMap& f, const EllipticityParams& params, const SamplingSpec& grid,
                                  Execution exec) {
  const auto p0 = profile(f, 0.0);
  if (std::abs(p0.jacobian - 1.0) > kSampledTol) {
    throw std::invalid_argument("verify_corollary1: requires J_f(0) = 1 (got " + std::to_string(p0.jacobian) + ")");
  }
  if (!(p0.lambda_min > 0.0)) throw std::invalid_argument("verify_corollary1: lambda_f(0) must be positive");
  Corollary1Check out{};
  out.Lambda_at_origin = p0.lambda_max;
  out.Lambda_bound = std::sqrt(params.K() + params.Kp());
  out.normalization_ok = out.Lambda_at_origin <= out.Lambda_bound + kSampledTol;
  const auto F = scale(f, 1.0 / p0.lambda_min);
  const EllipticityParams widened(params.K(), params.Kp() * (params.K() + params.Kp()));
  out.rescaled_margin = ellipticity_check(F, widened, kHypothesisRadius, grid, exec).min_margin;
  out.rescaled_elliptic = out.rescaled_margin >= -kSampledTol;
  out.lambda_F_at_origin = profile(F, 0.0).lambda_min;
  out.rho2 = bloch_corollary1(params);
  return out;
}

Report verify_corollary1_report(const EllipticityParams& params, std::span<const NamedMap> maps,
                                const SamplingSpec& grid, Execution exec) {
  Report report;
  report.theorem = "c1";
  report.params = params_json(params);
  const auto rho2 = bloch_corollary1(params);
  report.params["t"] = rho2.t;
  report.params["rho2"] = rho2.rho;
  for (const auto& m : maps) {
    MapRecord rec{m.id, m.source, {}, {}};
    const double own = ellipticity_check(m.map, params, kHypothesisRadius, grid, exec).min_margin;
    const double J0 = profile(m.map, 0.0).jacobian;
    Verdict hyp;
    hyp.check = "hypotheses";
    hyp.margin = own;
    if (std::abs(J0 - 1.0) > kSampledTol) {
      hyp.status = "excluded";
      hyp.note = "J_f(0) != 1";
    } else if (own < -kSampledTol) {
      hyp.status = "excluded";
      hyp.note = "sampled ellipticity margin negative";
    } else {
      hyp.status = "holds";
    }
    const bool ok = hyp.status == "holds";
    rec.verdicts.push_back(std::move(hyp));
    if (ok) {
      const auto c = verify_corollary1(m.map, params, grid, exec);
      rec.verdicts.push_back(simple("Lambda_origin", c.normalization_ok, c.Lambda_bound - c.Lambda_at_origin));
      rec.verdicts.push_back(simple("rescaled_ellipticity", c.rescaled_elliptic, c.rescaled_margin));
      const double err = std::abs(c.lambda_F_at_origin - 1.0);
      rec.verdicts.push_back(simple("lambda_F_origin", err <= 1e-12, -err));
      rec.slacks.push_back({"Lambda_origin", 0, c.Lambda_bound - c.Lambda_at_origin});
      rec.slacks.push_back({"rescaled_ellipticity", 0, c.rescaled_margin});
    }
    report.maps.push_back(std::move(rec));
  }
  return report;
}

RemarkCampaign remark_campaign(long n_samples, double K_max, double Kp_max, double lam_max) {
  if (n_samples <= 0) throw std::invalid_argument("remark_campaign: sample count must be positive");
  RemarkCampaign out;
  out.samples = n_samples;
  auto update = [](InequalityStats& s, const InequalityCheck& c, bool first, double K, double Kp, double lam) {
    s.failures += !c.holds;
    if (first || c.slack < s.min_slack) s = {s.failures, c.slack, K, Kp, lam};
  };
  for (long i = 1; i <= n_samples; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double K = 1.0 + (K_max - 1.0) * halton(idx, 2);
    const double Kp = Kp_max * halton(idx, 3);
    const double lam = 1.0 + (lam_max - 1.0) * halton(idx, 5);
    const auto r = remark_inequalities(EllipticityParams(K, Kp), DistortionBound(lam));
    update(out.correction, r.correction, i == 1, K, Kp, lam);
    update(out.r1, r.r1, i == 1, K, Kp, lam);
    update(out.sigma1, r.sigma1, i == 1, K, Kp, lam);
  }
  return out;
}

MonotonicityScan psi_monotonicity(long n_points, double lo, double hi) {
  if (n_points < 2 || !(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("psi_monotonicity: bad range");
  MonotonicityScan out;
  out.min_drop = std::numeric_limits<double>::infinity();
  const double step = std::log(hi / lo) / static_cast<double>(n_points - 1);
  double prev = psi(lo);
  for (long k = 1; k < n_points; ++k) {
    const double cur = psi(lo * std::exp(step * static_cast<double>(k)));
    ++out.pairs;
    out.violations += !(cur < prev);
    out.min_drop = std::min(out.min_drop, prev - cur);
    prev = cur;
  }
  return out;
}

Report remark_report(long n_samples, long psi_points) {
  const auto c = remark_campaign(n_samples);
  const auto mono = psi_monotonicity(psi_points);
  Report report;
  report.theorem = "remarks";
  report.params = {{"samples", n_samples}, {"K_max", 8.0}, {"Kp_max", 8.0}, {"lam_max", 8.0}, {"psi_points", psi_points}};

  MapRecord rec{"halton", "remark_campaign", {}, {}};
  for (const auto& [name, s] : {std::pair{"correction_below_sqrtKp", &c.correction},
                                std::pair{"r1_exceeds_older_radius", &c.r1},
                                std::pair{"sigma1_exceeds_older_radius", &c.sigma1}}) {
    auto v = simple(name, s->failures == 0, s->min_slack,
                    std::to_string(s->failures) + " failures; min slack at K=" + std::to_string(s->K) +
                        " Kp=" + std::to_string(s->Kp) + " lam=" + std::to_string(s->lam));
    rec.verdicts.push_back(std::move(v));
    rec.slacks.push_back({name, 0, s->min_slack});
  }
  report.maps.push_back(std::move(rec));

  MapRecord psi_rec{"psi", "psi_monotonicity", {}, {}};
  psi_rec.verdicts.push_back(simple("psi_strictly_decreasing", mono.violations == 0, mono.min_drop,
                                    std::to_string(mono.pairs) + " pairs"));
  psi_rec.slacks.push_back({"psi_drop", 0, mono.min_drop});
  report.maps.push_back(std::move(psi_rec));
  return report;
}

NamedMap extremal_Fn(int n, double lam) {
  const int N = std::max(kDefaultTruncation, fn_degree_for_accuracy(n, lam, kHypothesisRadius, 1e-13));
  return {"F" + std::to_string(n), "extremal Fn lam=" + std::to_string(lam), build_Fn(n, lam, N)};
}

std::vector<NamedMap> campaign_maps(const std::string& which, const EllipticityParams& params,
                                    const DistortionBound& lam, std::uint64_t seed, int count) {
  if (count < 0) throw std::invalid_argument("map count must be nonnegative");
  std::vector<NamedMap> maps{{"identity", "identity", HarmonicMap::identity()}};
  int max_n = 1;
  if (which == "1") {
    max_n = 8;
  } else if (which == "2") {
    max_n = 4;
  } else if (which == "3") {
    max_n = 2;
  } else if (which != "c1") {
    throw std::invalid_argument("unknown campaign '" + which + "'");
  }
  for (int n = 2; n <= max_n; ++n) maps.push_back(extremal_Fn(n, lam.value()));
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    auto f = random_elliptic(params, lam, s);
    if (which == "c1") f = scale(f, 1.0 / std::sqrt(profile(f, 0.0).jacobian));
    maps.push_back({"random-" + std::to_string(s), "random_elliptic seed=" + std::to_string(s), std::move(f)});
  }
  return maps;
}

}  // namespace elliptica
