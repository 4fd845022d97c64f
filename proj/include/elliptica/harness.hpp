#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elliptica/constants.hpp"
#include "elliptica/harmonic_map.hpp"
#include "elliptica/kernels.hpp"
#include "elliptica/oracles.hpp"
#include "elliptica/params.hpp"
#include "elliptica/report.hpp"
#include "elliptica/sampling.hpp"

namespace elliptica {

/// Radius at which sampled hypotheses are checked.
inline constexpr double kHypothesisRadius = 0.999;

/// phi(z) = (z + z0)/(1 + conj(z0) z), a disk automorphism with phi(0) = z0.
class MobiusAutomorphism {
 public:
  explicit MobiusAutomorphism(Complex z0);

  Complex z0() const noexcept { return z0_; }
  Complex operator()(Complex z) const noexcept { return (z + z0_) / (1.0 + std::conj(z0_) * z); }
  Complex derivative(Complex z) const noexcept;

 private:
  Complex z0_;
};

struct NamedMap {
  std::string id;
  std::string source;
  HarmonicMap map;
};

/// Map with f(0) = 0, lambda_f(0) = 1, degree 8, whose sampled lambda_f stays
/// below lam and whose sampled ellipticity margin is nonnegative on the
/// hypothesis grid. Deterministic in the seed. Throws std::runtime_error
/// ("generator exhausted") if the higher coefficients cannot be tamed.
HarmonicMap random_elliptic(const EllipticityParams& params, const DistortionBound& lam, std::uint64_t seed);

struct HypothesisCheck {
  bool ok;
  std::string reason;  ///< first failed hypothesis, empty when ok
  double value_at_origin;
  double lambda_at_origin;
  double sup_lambda;
  double min_margin;
};

/// f(0) = 0, lambda_f(0) = 1, sampled sup lambda_f <= lam and sampled
/// ellipticity margin >= -1e-9 on the hypothesis grid.
HypothesisCheck check_hypotheses(const HarmonicMap& f, const EllipticityParams& params, const DistortionBound& lam,
                                 Execution exec = Execution::parallel);

/// Coefficient estimate per map: slack coeff_bound(n) - (|a_n| + |b_n|) for
/// 2 <= n <= degree. Maps failing the hypotheses are excluded, not failed.
Report verify_theorem1(const EllipticityParams& params, const DistortionBound& lam, std::span<const NamedMap> maps,
                       Execution exec = Execution::parallel);

/// Univalence at r1 (1 - 1e-6) and coverage of sigma1 (1 - 1e-3), plus the
/// coefficient slacks.
Report verify_theorem2(const EllipticityParams& params, const DistortionBound& lam, std::span<const NamedMap> maps,
                       const SamplingSpec& spec = SamplingSpec::oracle_default(),
                       Execution exec = Execution::parallel);

struct PipelineOptions {
  double shrink = 1.0;     ///< run on z -> f(shrink z)
  bool evidence = false;   ///< also probe G near the origin
  SamplingSpec oracle_spec = SamplingSpec::oracle_default();
};

struct PipelineTrace {
  double M_sup;                   ///< sampled sup of (1 - |z|^2) lambda_f(z)
  Complex z0;                     ///< its argmax
  double lambda_G_violation;      ///< max over samples of lambda_G(w) - 2/(2 - |w|^2)
  double ellipticity_4Kp_margin;  ///< min over samples of K J_G + 4K' - ||D_G||^2
  double lambda_G_at_origin;
  Complex worst_lambda_point;
  Complex worst_margin_point;
  long samples;
  std::optional<OracleVerdict> univalence_evidence;
  std::optional<OracleVerdict> coverage_evidence;
};

/// Recentres f at the sampled maximiser of (1 - |z|^2) lambda_f, forms
/// G(w) = sqrt(2) (f(phi(w/sqrt 2)) - f(z0)) / M pointwise, and samples the
/// distortion and (K, 4K') ellipticity claims for G on the unit disk.
/// Throws std::runtime_error if J_G < 0 at a sample.
PipelineTrace theorem3_pipeline(const EvaluableMap& f, const EllipticityParams& params,
                                const SamplingSpec& grid = SamplingSpec::distortion_default(),
                                const PipelineOptions& options = {}, Execution exec = Execution::parallel);
PipelineTrace theorem3_pipeline(const HarmonicMap& f, const EllipticityParams& params,
                                const SamplingSpec& grid = SamplingSpec::distortion_default(),
                                const PipelineOptions& options = {}, Execution exec = Execution::parallel);

/// The recentred, rescaled map G of the pipeline for a given z0 and M.
EvaluableMap recentred_map(const EvaluableMap& f, Complex z0, double M);

Report verify_theorem3(const EllipticityParams& params, std::span<const NamedMap> maps,
                       const SamplingSpec& grid = SamplingSpec::distortion_default(),
                       const PipelineOptions& options = {}, Execution exec = Execution::parallel);

struct Corollary1Check {
  double Lambda_at_origin;
  double Lambda_bound;       ///< sqrt(K + K')
  bool normalization_ok;     ///< Lambda_f(0) <= sqrt(K + K') + 1e-9
  double rescaled_margin;    ///< sampled (K, K'(K+K')) margin of f / lambda_f(0)
  bool rescaled_elliptic;    ///< rescaled_margin >= -1e-9
  double lambda_F_at_origin;
  BlochBound rho2;
};

/// Requires J_f(0) = 1 to 1e-9 (std::invalid_argument otherwise).
Corollary1Check verify_corollary1(const HarmonicMap& f, const EllipticityParams& params,
                                  const SamplingSpec& grid = SamplingSpec::distortion_default(),
                                  Execution exec = Execution::parallel);

Report verify_corollary1_report(const EllipticityParams& params, std::span<const NamedMap> maps,
                                const SamplingSpec& grid = SamplingSpec::distortion_default(),
                                Execution exec = Execution::parallel);

struct InequalityStats {
  long failures = 0;
  double min_slack = 0.0;
  double K = 0.0, Kp = 0.0, lam = 0.0;  ///< where the min slack occurs
};

struct RemarkCampaign {
  long samples = 0;
  InequalityStats correction;
  InequalityStats r1;
  InequalityStats sigma1;

  long failures() const noexcept { return correction.failures + r1.failures + sigma1.failures; }
};

/// Halton samples (bases 2, 3, 5) of K in [1, K_max], K' in [0, Kp_max],
/// lam in (1, lam_max].
RemarkCampaign remark_campaign(long n_samples, double K_max = 8.0, double Kp_max = 8.0, double lam_max = 8.0);

struct MonotonicityScan {
  long pairs = 0;
  long violations = 0;
  double min_drop = 0.0;  ///< min of psi(t_k) - psi(t_{k+1})
};

/// Strict decrease of psi over n_points log-spaced points in [lo, hi].
MonotonicityScan psi_monotonicity(long n_points = 10001, double lo = 1e-6, double hi = 1e6);

Report remark_report(long n_samples, long psi_points = 10001);

/// F_n with lam, truncated so the dropped part of F_n' is below 1e-13 on the
/// hypothesis radius (at least the default truncation).
NamedMap extremal_Fn(int n, double lam);

/// Map set used by the campaigns: identity, extremals, then `count` random
/// maps with seeds seed, seed+1, ... . `which` is one of 1, 2, 3, c1; for c1
/// the random maps are rescaled to J_f(0) = 1.
std::vector<NamedMap> campaign_maps(const std::string& which, const EllipticityParams& params,
                                    const DistortionBound& lam, std::uint64_t seed, int count);

}  // namespace elliptica
