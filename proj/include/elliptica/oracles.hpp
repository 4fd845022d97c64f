#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elliptica/harmonic_map.hpp"
#include "elliptica/kernels.hpp"
#include "elliptica/sampling.hpp"

namespace elliptica {

enum class VerdictStatus { certified, refuted, inconclusive };

const char* to_string(VerdictStatus status) noexcept;

/// Grid parameters behind a verdict, enough to reproduce it.
struct Resolution {
  int n_r = 0;
  int n_theta = 0;
  int rounds_used = 0;
  double mesh = 0.0;
  double delta_sep = 0.0;
  double eps_img = 0.0;
  double lipschitz = 0.0;      ///< largest per-cell Lipschitz bound
  double hessian_bound = 0.0;  ///< bound on |h''| + |g''| over the disk
  long samples = 0;
  bool majorant = false;  ///< hessian_bound from coefficients rather than sampling
};

/// Refuted verdicts carry a witness: a colliding pair for univalence, an
/// uncovered point for coverage. Certified verdicts have margin > 0.
struct OracleVerdict {
  VerdictStatus status = VerdictStatus::inconclusive;
  std::vector<Complex> witness;
  double margin = 0.0;
  Resolution resolution;
  std::string note;
};

/// Injectivity of f on the closed disk |z| <= r, by pairwise separation of
/// polar cells. Each cell is either covered by a ball on which f is provably
/// injective given the second-derivative bound, or Lipschitz-separated in the
/// image from every other cell. Pairs that resist both are searched for a
/// genuine collision by Newton's method. Certification is floating-point
/// evidence and is labelled "grid-certified".
OracleVerdict univalence_probe(const EvaluableMap& f, double r,
                               const SamplingSpec& spec = SamplingSpec::oracle_default(),
                               Execution exec = Execution::parallel);
OracleVerdict univalence_probe(const HarmonicMap& f, double r,
                               const SamplingSpec& spec = SamplingSpec::oracle_default(),
                               Execution exec = Execution::parallel);

struct WindingResult {
  std::optional<int> winding;  ///< empty when the mesh precondition fails
  double min_distance;         ///< min over samples of |f(r e^{i theta}) - w|
  double mesh;                 ///< longest chord plus the chord-to-arc deviation bound
};

/// Winding number of theta -> f(r e^{i theta}) - w from n_theta samples.
WindingResult winding_number(const EvaluableMap& f, double r, Complex w, int n_theta);
WindingResult winding_number(const HarmonicMap& f, double r, Complex w, int n_theta);

/// Winding of the closed polyline through `curve` around w (summed argument
/// increments, rounded).
int winding_from_samples(std::span<const Complex> curve, Complex w);

/// Whether f(D_r) contains the disk |w| < rho, for f(0) = 0. Certified when the
/// image boundary curve keeps distance > rho from the origin and winds around
/// it; refuted when a net point of the disk has winding zero with the curve
/// safely away from it.
OracleVerdict coverage_probe(const EvaluableMap& f, double r, double rho,
                             const SamplingSpec& spec = SamplingSpec::oracle_default(),
                             Execution exec = Execution::parallel);
OracleVerdict coverage_probe(const HarmonicMap& f, double r, double rho,
                             const SamplingSpec& spec = SamplingSpec::oracle_default(),
                             Execution exec = Execution::parallel);

}  // namespace elliptica
