#pragma once

#include "elliptica/harmonic_map.hpp"
#include "elliptica/kernels.hpp"
#include "elliptica/params.hpp"
#include "elliptica/sampling.hpp"

namespace elliptica {

/// Length distortions at a point: Lambda_f = |f_z| + |f_zbar|,
/// lambda_f = ||f_z| - |f_zbar||, J_f = |f_z|^2 - |f_zbar|^2, ||D_f||^2 = Lambda_f^2.
struct DistortionProfile {
  double lambda_max;
  double lambda_min;
  double jacobian;
  double op_norm_sq;
};

DistortionProfile profile_from(const Wirtinger& d) noexcept;
DistortionProfile profile(const HarmonicMap& f, Complex z);
DistortionProfile profile(const EvaluableMap& f, Complex z);

/// Sampled checks are evidence; a negative margin at a sample of a real-analytic
/// map is a pointwise certificate of violation.
enum class EvidenceKind { evidence, certificate };

const char* to_string(EvidenceKind kind) noexcept;

struct EllipticityReport {
  EllipticityParams params;
  double min_margin;  ///< min over samples of K J_f + K' - ||D_f||^2
  Complex worst_point;
  long sample_count;
  bool sense_preserving_everywhere_sampled;
  double min_abs_jacobian;

  EvidenceKind label() const noexcept {
    return min_margin < 0.0 ? EvidenceKind::certificate : EvidenceKind::evidence;
  }
};

/// Margin K J_f + K' - ||D_f||^2 on the polar grid of radius `region_radius`,
/// followed by Halton refinement rounds around the worst sample. Sense reversal
/// (J_f < 0) is reported, not thrown.
EllipticityReport ellipticity_check(const EvaluableMap& f, const EllipticityParams& params,
                                    double region_radius,
                                    const SamplingSpec& grid = SamplingSpec::distortion_default(),
                                    Execution exec = Execution::parallel);

EllipticityReport ellipticity_check(const HarmonicMap& f, const EllipticityParams& params,
                                    double region_radius,
                                    const SamplingSpec& grid = SamplingSpec::distortion_default(),
                                    Execution exec = Execution::parallel);

struct SupEstimate {
  double value;
  Complex argmax;
  double resolution;  ///< largest spacing of the sampling grid
};

/// Max of lambda_f over the polar grid (no refinement, so nested grids give
/// nondecreasing answers in the radius).
SupEstimate sup_lambda_min(const EvaluableMap& f, double region_radius,
                           const SamplingSpec& grid = SamplingSpec::distortion_default(),
                           Execution exec = Execution::parallel);

SupEstimate sup_lambda_min(const HarmonicMap& f, double region_radius,
                           const SamplingSpec& grid = SamplingSpec::distortion_default(),
                           Execution exec = Execution::parallel);

}  // namespace elliptica
